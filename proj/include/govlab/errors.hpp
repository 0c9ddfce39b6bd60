#pragma once

#include <stdexcept>
#include <string>

namespace govlab {

/// Input outside the mathematical domain of an operation (e.g. v2(0), even seed).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter outside a documented validity range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Structural invariant violated by a caller-supplied value.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace govlab
