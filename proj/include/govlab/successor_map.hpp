#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "govlab/natural.hpp"

namespace govlab {

/// One row of the 5Z+1 successor map: after applying `steps` to the family's
/// start value the result should be congruent to `low` modulo
/// 2^(placeholder - modulus_offset). The leading placeholder term 2^Q (or 2^P,
/// 2^R) is carried only through its image in the high bits.
struct SuccessorRowSpec {
  std::string label;
  std::string steps;       // O/E letters, empty for the start value
  std::string expression;  // the printed form, in the family's placeholder
  std::uint64_t low;
  std::size_t modulus_offset;
};

struct SuccessorFamily {
  std::string id;           // HEAD, R2, R3, R4, R4_Q5, R4_Q6
  std::string placeholder;  // name of the free exponent: R, Q or P
  std::uint64_t start_low;  // start value is 2^placeholder + start_low
  std::vector<SuccessorRowSpec> rows;

  std::size_t min_placeholder() const;
};

const std::vector<SuccessorFamily>& successor_families();

struct SuccessorRowResult {
  std::string family;
  std::string label;
  std::string steps;
  std::string expression;
  std::size_t modulus_exponent = 0;
  Natural stated_low;
  Natural computed;            // exact value after the replayed steps
  Natural computed_residue;    // computed mod 2^modulus_exponent
  bool parity_ok = true;       // every prescribed step matched the parity of its input
  std::size_t parity_break = 0;  // 1-based step index of the first violation
  bool match = false;
};

/// Exact replay of one family at the given placeholder exponent. Throws
/// RangeError if the exponent leaves some modulus below 2^1 or exceeds 4096.
std::vector<SuccessorRowResult> replay_successor_family(const SuccessorFamily& family, std::size_t placeholder);

}  // namespace govlab
