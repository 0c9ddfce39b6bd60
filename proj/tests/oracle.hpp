#pragma once

// Brute-force reference computations used only by tests. Everything here works
// on raw mpz_class values and linear scans, independent of the library paths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class pow2(unsigned long k) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= 2;
  return r;
}

// Divide by two until odd, counting.
inline std::size_t valuation(mpz_class x) {
  std::size_t k = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++k;
  }
  return k;
}

// Trailing one-bits by repeated division.
inline std::size_t trailing_ones(mpz_class x) {
  std::size_t k = 0;
  while (x % 2 == 1) {
    x /= 2;
    ++k;
  }
  return k;
}

inline mpz_class step(const mpz_class& x, unsigned long q) { return x % 2 == 1 ? x * q + 1 : mpz_class(x / 2); }

enum class End { Trivial, Cycle, Steps, Bits };

struct Walk {
  std::vector<mpz_class> values;  // start first
  End end = End::Steps;
  std::vector<mpz_class> cycle;   // from the repeated value on
};

inline bool trivial_member(const mpz_class& v, unsigned long q) {
  const std::vector<long> t3 = {1, 4, 2}, t5 = {1, 6, 3, 16, 8, 4, 2};
  for (long m : (q == 3 ? t3 : t5)) {
    if (v == m) return true;
  }
  return false;
}

// Direct iteration with linear-search repeat detection.
inline Walk walk(const mpz_class& start, unsigned long q, std::size_t max_steps, std::size_t max_bits) {
  Walk w;
  w.values.push_back(start);
  if (mpz_sizeinbase(start.get_mpz_t(), 2) > max_bits) { w.end = End::Bits; return w; }
  if (trivial_member(start, q)) { w.end = End::Trivial; return w; }
  for (std::size_t s = 1;; ++s) {
    mpz_class v = step(w.values.back(), q);
    w.values.push_back(v);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits) { w.end = End::Bits; return w; }
    if (trivial_member(v, q)) { w.end = End::Trivial; return w; }
    for (std::size_t p = 0; p + 1 < w.values.size(); ++p) {
      if (w.values[p] == v) {
        w.end = End::Cycle;
        w.cycle.assign(w.values.begin() + static_cast<long>(p), w.values.end() - 1);
        return w;
      }
    }
    if (s >= max_steps) { w.end = End::Steps; return w; }
  }
}

// Odd ancestors via modular arithmetic: a exists iff 2^i x == 1 (mod q).
inline std::vector<std::pair<std::size_t, mpz_class>> ancestors(const mpz_class& x, unsigned long q, std::size_t max_i) {
  std::vector<std::pair<std::size_t, mpz_class>> out;
  for (std::size_t i = 1; i <= max_i; ++i) {
    const mpz_class t = pow2(static_cast<unsigned long>(i)) * x;
    mpz_class r = t % q;
    if (r == 1) {
      mpz_class a = (t - 1) / q;
      if (a % 2 == 1) out.emplace_back(i, a);
    }
  }
  return out;
}

}  // namespace oracle
