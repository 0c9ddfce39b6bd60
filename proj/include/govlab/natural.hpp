#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace govlab {

/// Arbitrary-precision nonnegative integer.
///
/// Only the handful of operations the Collatz-type dynamics need are exposed:
/// small-multiplier multiply-add, shifts, bit queries and comparison. The
/// external representation is always a decimal string.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Natural(const mpz_class& v);
  explicit Natural(mpz_class&& v);

  /// Parses a decimal string. Throws std::invalid_argument on anything else.
  static Natural from_decimal(std::string_view text);
  static Natural pow2(std::size_t k);
  /// 2^k - 1
  static Natural mersenne(std::size_t k);

  std::string to_decimal() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool is_even() const { return !is_odd(); }
  /// Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  bool bit(std::size_t pos) const { return mpz_tstbit(value_.get_mpz_t(), pos) != 0; }
  /// Index of the lowest set bit at or above `from`; requires a nonzero value.
  std::size_t scan1(std::size_t from = 0) const { return mpz_scan1(value_.get_mpz_t(), from); }
  std::size_t scan0(std::size_t from = 0) const { return mpz_scan0(value_.get_mpz_t(), from); }

  bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  std::uint64_t to_u64() const { return mpz_get_ui(value_.get_mpz_t()); }
  bool fits_u128() const { return bit_length() <= 128; }
  unsigned __int128 to_u128() const;
  static Natural from_u128(unsigned __int128 v);

  /// this * q + 1
  Natural mul_add_one(std::uint64_t q) const;
  Natural operator+(const Natural& o) const { return Natural(mpz_class(value_ + o.value_)); }
  /// Requires *this >= o.
  Natural operator-(const Natural& o) const;
  Natural operator*(const Natural& o) const { return Natural(mpz_class(value_ * o.value_)); }
  Natural operator<<(std::size_t k) const;
  Natural operator>>(std::size_t k) const;
  /// Remainder modulo 2^k.
  Natural low_bits(std::size_t k) const;
  /// Exact quotient and remainder by a small divisor.
  std::uint64_t mod_small(std::uint64_t d) const;
  Natural div_small(std::uint64_t d) const;

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;
  const mpz_class& mpz() const { return value_; }

 private:
  mpz_class value_{0};
};

}  // namespace govlab

template <>
struct std::hash<govlab::Natural> {
  std::size_t operator()(const govlab::Natural& n) const noexcept { return n.hash(); }
};
