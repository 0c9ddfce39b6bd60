#include <doctest.h>

#include "govlab/closed_form.hpp"
#include "govlab/errors.hpp"
#include "oracle.hpp"

using govlab::ClosedFormFamily;
using govlab::Natural;
using govlab::Rule;

namespace {

Natural row_value(ClosedFormFamily f, std::size_t param, const std::string& label) {
  for (const auto& r : govlab::eval_closed_form(f, param)) {
    if (r.label == label) return r.value;
  }
  FAIL("missing row " << label);
  return Natural(0);
}

mpz_class iterate(mpz_class x, unsigned long q, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) x = oracle::step(x, q);
  return x;
}

}  // namespace

TEST_CASE("closed-form examples") {
  // 2^7 - 1 after O E O E O E
  CHECK(iterate(127, 3, 6) == 431);
  CHECK(row_value(ClosedFormFamily::T1_3Z, 7, "E{3}") == Natural(431));
  // 2^5 + 1 after O E E
  CHECK(iterate(33, 3, 3) == 25);
  CHECK(row_value(ClosedFormFamily::T2_3Z, 5, "E^(2){m}") == Natural(25));
  // 2^5 + 3 after O E E E E
  CHECK(iterate(35, 5, 5) == 11);
  CHECK(row_value(ClosedFormFamily::T2_5Z_EVEN, 5, "E^(4){m/2}") == Natural(11));
}

TEST_CASE("validity ranges are enforced") {
  CHECK_THROWS_AS(govlab::eval_closed_form(ClosedFormFamily::T1_3Z, 3), govlab::RangeError);
  CHECK_NOTHROW(govlab::eval_closed_form(ClosedFormFamily::T1_3Z, 4));
  CHECK_THROWS_AS(govlab::eval_closed_form(ClosedFormFamily::T1_5Z, 4), govlab::RangeError);
  CHECK_THROWS_AS(govlab::eval_closed_form(ClosedFormFamily::T2_3Z, 2), govlab::RangeError);
  CHECK_THROWS_AS(govlab::eval_closed_form(ClosedFormFamily::T2_5Z_ODD, 2), govlab::RangeError);
  CHECK_THROWS_AS(govlab::eval_closed_form(ClosedFormFamily::T2_5Z_EVEN, 4), govlab::RangeError);
  CHECK_THROWS_AS(govlab::check_closed_form(ClosedFormFamily::T1_3Z, 5, 64, Rule::five()), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::check_closed_form(ClosedFormFamily::T1_3Z, 10, 5, Rule::three()), govlab::RangeError);
}

TEST_CASE("P = 4 really breaks the even 5Z+1 family") {
  // 2^4 + 3 = 19: four halvings of 96 leave 6, which is even
  CHECK(iterate(19, 5, 5) == 6);
}

TEST_CASE("every family matches direct iteration over its checked range") {
  CHECK(govlab::check_closed_form(ClosedFormFamily::T1_3Z, 5, 64, Rule::three()).empty());
  CHECK(govlab::check_closed_form(ClosedFormFamily::T1_5Z, 5, 64, Rule::five()).empty());
  CHECK(govlab::check_closed_form(ClosedFormFamily::T2_3Z, 3, 64, Rule::three()).empty());
  CHECK(govlab::check_closed_form(ClosedFormFamily::T2_5Z_ODD, 3, 64, Rule::five()).empty());
  CHECK(govlab::check_closed_form(ClosedFormFamily::T2_5Z_EVEN, 5, 64, Rule::five()).empty());
  // lowest valid parameters too
  CHECK(govlab::check_closed_form(ClosedFormFamily::T1_3Z, 4, 4, Rule::three()).empty());
}

TEST_CASE("rows agree with an independent oracle walk") {
  for (auto f : govlab::all_families()) {
    const unsigned long q = govlab::family_multiplier(f);
    for (std::size_t p = govlab::family_min_param(f); p <= 40; ++p) {
      const auto rows = govlab::eval_closed_form(f, p);
      for (const auto& r : rows) {
        REQUIRE(iterate(rows.front().value.mpz(), q, r.position) == r.value.mpz());
      }
    }
  }
}

TEST_CASE("family names roundtrip") {
  for (auto f : govlab::all_families()) CHECK(govlab::parse_family(govlab::family_name(f)) == f);
  CHECK_THROWS_AS(govlab::parse_family("T9"), govlab::ValidationError);
}
