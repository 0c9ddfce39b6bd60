#include "govlab/rule.hpp"

#include <stdexcept>
#include <string>

#include "govlab/errors.hpp"
#include "govlab/numerics.hpp"

namespace govlab {
namespace {

// Replays the hard-coded cycle through the step functions.
void validate_trivial_cycle(const Rule& rule) {
  const auto& c = rule.trivial_cycle();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Natural& cur = c[i];
    const Natural expected = cur.is_odd() ? cur.mul_add_one(rule.multiplier()) : cur >> 1;
    if (!(expected == c[(i + 1) % c.size()])) {
      throw std::logic_error("trivial cycle of " + rule.id() + " does not close");
    }
  }
  std::set<std::size_t> seen;
  for (const auto& v : c) {
    if (v.is_odd()) seen.insert(governor_index(v));
  }
  if (seen != rule.trivial_indices()) {
    throw std::logic_error("trivial indices of " + rule.id() + " disagree with its cycle");
  }
}

}  // namespace

Rule Rule::from_multiplier(std::uint64_t q) {
  Rule r;
  r.q_ = q;
  if (q == 3) {
    r.trivial_indices_ = {1};
    r.trivial_cycle_ = {1, 4, 2};
    r.descent_delta_ = 1;
  } else if (q == 5) {
    r.trivial_indices_ = {1, 2};
    r.trivial_cycle_ = {1, 6, 3, 16, 8, 4, 2};
    r.descent_delta_ = 2;
  } else {
    throw DomainError("unsupported rule multiplier " + std::to_string(q) + " (expected 3 or 5)");
  }
  for (const auto& v : r.trivial_cycle_) r.trivial_mask_ |= std::uint64_t{1} << v.to_u64();
  validate_trivial_cycle(r);
  return r;
}

bool Rule::in_trivial_cycle(const Natural& x) const {
  return x.bit_length() <= 6 && in_trivial_cycle(static_cast<unsigned __int128>(x.to_u64()));
}

bool Rule::in_trivial_cycle(unsigned __int128 x) const {
  return x < 64 && ((trivial_mask_ >> static_cast<unsigned>(x)) & 1U) != 0;
}

}  // namespace govlab
