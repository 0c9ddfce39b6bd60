#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "govlab/natural.hpp"
#include "govlab/rule.hpp"

namespace govlab {

/// Symbolic orbit prefixes for Mersenne-type starts (T1_*) and for starts
/// whose Governor has reached the trivial index (T2_*).
enum class ClosedFormFamily { T1_3Z, T1_5Z, T2_3Z, T2_5Z_ODD, T2_5Z_EVEN };

std::string_view family_name(ClosedFormFamily f);
/// Throws ValidationError for an unknown name.
ClosedFormFamily parse_family(std::string_view name);
std::uint64_t family_multiplier(ClosedFormFamily f);
/// Smallest parameter for which every row of the family is valid.
std::size_t family_min_param(ClosedFormFamily f);
const std::vector<ClosedFormFamily>& all_families();

struct ClosedFormRow {
  std::string label;       // e.g. "E{3}", "E^(2){m}"
  std::string expression;  // the symbolic form, in the family's parameter
  std::size_t position;    // number of O/E steps from the start value
  Natural value;
};

/// Evaluates every row of a family at parameter m (T1_*) or P (T2_*).
/// Throws RangeError below the family's validity bound or above 1 << 20.
std::vector<ClosedFormRow> eval_closed_form(ClosedFormFamily family, std::size_t param);

struct ClosedFormMismatch {
  std::size_t param;
  std::string label;
  Natural predicted;
  Natural actual;
};

/// Replays the actual orbit for every parameter in [lo, hi] and reports rows
/// whose prediction differs. Throws RangeError for an invalid range and
/// ValidationError if the rule does not match the family.
std::vector<ClosedFormMismatch> check_closed_form(ClosedFormFamily family, std::size_t lo, std::size_t hi,
                                                  const Rule& rule);

}  // namespace govlab
