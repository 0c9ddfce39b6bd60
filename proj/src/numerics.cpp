#include "govlab/numerics.hpp"

#include <string>

#include "govlab/errors.hpp"

namespace govlab {

std::size_t v2(const Natural& x) {
  if (x.is_zero()) throw DomainError("v2 of zero is undefined");
  return x.scan1(0);
}

std::size_t governor_index(const Natural& x) {
  if (!x.is_odd()) throw DomainError("governor index requires an odd value, got " + x.to_decimal());
  // first zero bit of an odd value == length of its trailing run of ones
  return x.scan0(0);
}

GovernorForm decompose(const Natural& x) {
  GovernorForm f;
  f.governor_index = governor_index(x);
  const std::size_t top = x.bit_length();
  // bit m is zero by construction; collect set bits above it
  for (std::size_t pos = f.governor_index + 1; pos < top; ++pos) {
    pos = x.scan1(pos);
    if (pos >= top) break;
    f.high_exponents.push_back(pos);
  }
  return f;
}

Natural reconstruct(const GovernorForm& f) {
  if (f.governor_index == 0) throw ValidationError("governor index must be positive");
  std::size_t prev = f.governor_index;
  mpz_class acc;
  for (std::size_t e : f.high_exponents) {
    if (e <= prev) {
      throw ValidationError("high exponent " + std::to_string(e) +
                            " must exceed the governor index and preceding exponents");
    }
    mpz_setbit(acc.get_mpz_t(), e);
    prev = e;
  }
  mpz_class gov;
  mpz_setbit(gov.get_mpz_t(), f.governor_index);
  acc += gov - 1;
  return Natural(std::move(acc));
}

}  // namespace govlab
