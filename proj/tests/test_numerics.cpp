#include <doctest.h>

#include <random>

#include "govlab/errors.hpp"
#include "govlab/numerics.hpp"
#include "oracle.hpp"
#include "random_values.hpp"

using govlab::Natural;
using govlab::GovernorForm;

TEST_CASE("v2 examples and zero") {
  CHECK(govlab::v2(Natural(12)) == 2);
  CHECK(govlab::v2(Natural(1)) == 0);
  CHECK(govlab::v2(Natural::pow2(10)) == 10);
  CHECK_THROWS_AS(govlab::v2(Natural(0)), govlab::DomainError);
}

TEST_CASE("governor_index examples") {
  CHECK(govlab::governor_index(Natural(27)) == 2);
  CHECK(govlab::governor_index(Natural(7)) == 3);
  CHECK(govlab::governor_index(Natural(13)) == 1);
  CHECK(govlab::governor_index(Natural(13)) == oracle::trailing_ones(13));
  CHECK(govlab::governor_index(Natural(1)) == 1);
  CHECK_THROWS_AS(govlab::governor_index(Natural(28)), govlab::DomainError);
}

TEST_CASE("decompose examples") {
  CHECK(govlab::decompose(Natural(27)) == GovernorForm{{3, 4}, 2});
  CHECK(govlab::decompose(Natural::mersenne(9)) == GovernorForm{{}, 9});
  CHECK(govlab::decompose(Natural(11)) == GovernorForm{{3}, 2});
  CHECK(govlab::decompose(Natural(1)) == GovernorForm{{}, 1});
  CHECK_THROWS_AS(govlab::decompose(Natural(10)), govlab::DomainError);
}

TEST_CASE("reconstruct examples and invariant violations") {
  CHECK(govlab::reconstruct({{3, 4}, 2}) == Natural(27));
  CHECK(govlab::reconstruct({{}, 1}) == Natural(1));
  CHECK(govlab::reconstruct({{5}, 1}) == Natural(33));
  CHECK_THROWS_AS(govlab::reconstruct({{2}, 2}), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::reconstruct({{1, 5}, 2}), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::reconstruct({{5, 4}, 2}), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::reconstruct({{}, 0}), govlab::ValidationError);
}

TEST_CASE("roundtrip, valuation identity and exponent bound on random odd values") {
  std::mt19937_64 rng(20240611);
  for (int n = 0; n < 20000; ++n) {
    const Natural x = testing_support::random_odd(rng, 700);
    const GovernorForm f = govlab::decompose(x);
    REQUIRE(govlab::reconstruct(f) == x);

    const std::size_t m = govlab::governor_index(x);
    REQUIRE(m == govlab::v2(x + Natural(1)));
    REQUIRE(m == oracle::trailing_ones(x.mpz()));
    REQUIRE(f.governor_index == m);
    if (!f.high_exponents.empty()) REQUIRE(f.high_exponents.front() >= m + 1);
    for (std::size_t i = 1; i < f.high_exponents.size(); ++i) REQUIRE(f.high_exponents[i - 1] < f.high_exponents[i]);
  }
}

TEST_CASE("v2(2^k * u) == k for odd u") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 3000; ++n) {
    const std::size_t k = rng() % 513;
    const Natural u = testing_support::random_odd(rng, 300);
    const Natural x = u << k;
    REQUIRE(govlab::v2(x) == k);
    REQUIRE(govlab::v2(x) == oracle::valuation(x.mpz()));
  }
}

TEST_CASE("Natural decimal parsing and u128 conversion") {
  const Natural big = Natural::from_decimal("340282366920938463463374607431768211455");
  CHECK(big == Natural::mersenne(128));
  CHECK(big.fits_u128());
  CHECK(Natural::from_u128(big.to_u128()) == big);
  CHECK(big.to_decimal() == "340282366920938463463374607431768211455");
  CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal("-3"), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Natural(5) - Natural(6), std::domain_error);
}
