#include "govlab/successor_map.hpp"

#include <algorithm>

#include "govlab/errors.hpp"

namespace govlab {
namespace {

constexpr std::uint64_t kQ = 5;
constexpr std::size_t kMaxPlaceholder = 4096;

}  // namespace

std::size_t SuccessorFamily::min_placeholder() const {
  std::size_t off = 0;
  for (const auto& r : rows) off = std::max(off, r.modulus_offset);
  return off + 1;
}

const std::vector<SuccessorFamily>& successor_families() {
  static const std::vector<SuccessorFamily> families = {
      {"HEAD", "R", 1,
       {{"X", "", "2^R + 2^1 - 1", 1, 0},
        {"OEO(X)", "OEO", "2^(R-1) + 2^4", 16, 1}}},
      {"R2", "Q", 5,
       {{"X", "", "2^Q + 2^2 + 2^1 - 1", 5, 0},
        {"OE(X)", "OE", "2^(Q-1) + 2^3 + 2^2 + 2^1 - 1", 13, 1},
        {"OEOE(X)", "OEOE", "2^(Q-2) + 2^5 + 2^1 - 1", 33, 2},
        {"OEOEOE(X)", "OEOEOE", "2^(Q-3) + 2^6 + 2^4 + 2^2 - 1", 83, 3},
        {"OEOEOEOE^(5)(X)", "OEOEOEOEEEEE", "2^(Q-8) + 2^3 + 2^2 + 2^1 - 1", 13, 8}}},
      {"R3", "Q", 9,
       {{"X", "", "2^Q + 2^3 + 2^1 - 1", 9, 0},
        {"OE(X)", "OE", "2^(Q-1) + 2^4 + 2^3 - 1", 23, 1}}},
      {"R4", "Q", 17,
       {{"X", "", "2^Q + 2^4 + 2^1 - 1", 17, 0},
        {"OE(X)", "OE", "2^(Q-1) + 2^5 + 2^3 + 2^2 - 1", 43, 1},
        {"OEOEEE(X)", "OEOEEE", "2^(Q-4) + 2^4 + 2^3 + 2^2 - 1", 27, 4},
        {"OEOEEEO(X)", "OEOEEEO", "2^(Q-4) + 2^7 + 2^3", 136, 4},
        {"OE.OE^(3).OE^(3)(X)", "OEOEEEOEEE", "X with 2^Q disregarded: 2^4 + 2^1 - 1", 17, 7}}},
      {"R4_Q5", "P", 49,
       {{"X", "", "2^P + 2^5 + 2^4 + 2^1 - 1", 49, 0},
        {"OE(X)", "OE", "2^(P-1) + 2^6 + 2^5 + 2^4 + 2^3 + 2^2 - 1", 123, 1},
        {"OEOE(X)", "OEOE", "2^(P-2) + 2^9 + 2^5 + 2^4 - 1", 559, 2}}},
      {"R4_Q6", "P", 81,
       {{"X", "", "2^P + 2^6 + 2^4 + 2^1 - 1", 81, 0},
        {"OE(X)", "OE", "2^(P-1) + 2^7 + 2^6 + 2^3 + 2^2 - 1", 203, 1},
        {"OEOEEE(X)", "OEOEEE", "2^(P-4) + 2^6 + 2^5 - 1", 95, 4}}},
  };
  return families;
}

std::vector<SuccessorRowResult> replay_successor_family(const SuccessorFamily& family, std::size_t placeholder) {
  if (placeholder < family.min_placeholder() || placeholder > kMaxPlaceholder) {
    throw RangeError("family " + family.id + " needs " + family.placeholder + " in [" +
                     std::to_string(family.min_placeholder()) + ", " + std::to_string(kMaxPlaceholder) + "], got " +
                     std::to_string(placeholder));
  }
  const Natural start = Natural::pow2(placeholder) + Natural(family.start_low);

  std::vector<SuccessorRowResult> out;
  for (const auto& row : family.rows) {
    SuccessorRowResult r;
    r.family = family.id;
    r.label = row.label;
    r.steps = row.steps;
    r.expression = row.expression;
    r.modulus_exponent = placeholder - row.modulus_offset;
    r.stated_low = Natural(row.low);

    Natural v = start;
    for (std::size_t k = 0; k < row.steps.size(); ++k) {
      const bool want_odd = row.steps[k] == 'O';
      if (want_odd != v.is_odd() && r.parity_ok) {
        r.parity_ok = false;
        r.parity_break = k + 1;
      }
      // keep following the rule itself so the computed value stays meaningful
      v = v.is_odd() ? v.mul_add_one(kQ) : v >> 1;
    }
    r.computed = v;
    r.computed_residue = v.low_bits(r.modulus_exponent);
    r.match = r.parity_ok && r.computed_residue == r.stated_low.low_bits(r.modulus_exponent);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace govlab
