#pragma once

#include <cstddef>
#include <vector>

#include "govlab/natural.hpp"

namespace govlab {

/// Odd integer written as  sum_{M in high} 2^M + 2^m - 1  with every M > m.
///
/// `governor_index` is the length of the trailing run of one-bits; the block
/// 2^m - 1 is the Governor. `high_exponents` is strictly ascending.
struct GovernorForm {
  std::vector<std::size_t> high_exponents;
  std::size_t governor_index = 1;

  friend bool operator==(const GovernorForm&, const GovernorForm&) = default;
};

/// 2-adic valuation. Throws DomainError for zero.
std::size_t v2(const Natural& x);

/// Trailing one-bit count of an odd value, i.e. v2(x + 1). Throws DomainError for even x.
std::size_t governor_index(const Natural& x);

GovernorForm decompose(const Natural& x);

/// Throws ValidationError if any high exponent is <= governor_index, the
/// exponents are not strictly ascending, or governor_index is zero.
Natural reconstruct(const GovernorForm& f);

}  // namespace govlab
