#include "govlab/natural.hpp"

#include <stdexcept>

namespace govlab {

Natural::Natural(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  value_ = static_cast<unsigned long>(v);
}

Natural::Natural(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw std::invalid_argument("Natural: negative value");
}

Natural::Natural(mpz_class&& v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::invalid_argument("Natural: negative value");
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return Natural(mpz_class(std::string(text), 10));
}

Natural Natural::pow2(std::size_t k) {
  mpz_class r;
  mpz_setbit(r.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural Natural::mersenne(std::size_t k) {
  mpz_class r;
  mpz_setbit(r.get_mpz_t(), k);
  r -= 1;
  return Natural(std::move(r));
}

std::string Natural::to_decimal() const { return value_.get_str(10); }

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

unsigned __int128 Natural::to_u128() const {
  const mpz_class hi = value_ >> 64;
  const mpz_class lo = value_ & mpz_class("18446744073709551615");
  return (static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

Natural Natural::from_u128(unsigned __int128 v) {
  mpz_class r = static_cast<unsigned long>(v >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(v);
  return Natural(std::move(r));
}

Natural Natural::mul_add_one(std::uint64_t q) const {
  mpz_class r = value_ * static_cast<unsigned long>(q);
  r += 1;
  return Natural(std::move(r));
}

Natural Natural::operator-(const Natural& o) const {
  if (*this < o) throw std::domain_error("Natural subtraction underflow");
  return Natural(mpz_class(value_ - o.value_));
}

Natural Natural::operator<<(std::size_t k) const {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), value_.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural Natural::operator>>(std::size_t k) const {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), value_.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural Natural::low_bits(std::size_t k) const {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), value_.get_mpz_t(), k);
  return Natural(std::move(r));
}

std::uint64_t Natural::mod_small(std::uint64_t d) const {
  return mpz_fdiv_ui(value_.get_mpz_t(), static_cast<unsigned long>(d));
}

Natural Natural::div_small(std::uint64_t d) const {
  mpz_class r;
  mpz_fdiv_q_ui(r.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(d));
  return Natural(std::move(r));
}

std::size_t Natural::hash() const {
  const mpz_srcptr p = value_.get_mpz_t();
  const std::size_t n = mpz_size(p);
  std::size_t h = n * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= mpz_getlimbn(p, static_cast<mp_size_t>(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace govlab
