#include <doctest.h>

#include <random>

#include "govlab/errors.hpp"
#include "govlab/dynamics.hpp"
#include "govlab/genealogy.hpp"
#include "govlab/numerics.hpp"
#include "oracle.hpp"
#include "random_values.hpp"

using govlab::AncestorEntry;
using govlab::ConditionSolution;
using govlab::Natural;
using govlab::Rule;

TEST_CASE("even_ancestor") {
  CHECK(govlab::even_ancestor(Natural(1), 2) == Natural(4));
  CHECK(govlab::even_ancestor(Natural(13), 1) == Natural(26));
  CHECK_THROWS_AS(govlab::even_ancestor(Natural(5), 0), govlab::DomainError);
}

TEST_CASE("odd_ancestors examples") {
  const std::vector<AncestorEntry> one{{2, 1}, {4, 5}, {6, 21}, {8, 85}};
  CHECK(govlab::odd_ancestors(Natural(1), Rule::three(), 8) == one);
  CHECK(govlab::odd_ancestors(Natural(13), Rule::five(), 4) == std::vector<AncestorEntry>{{1, 5}});
  CHECK(govlab::odd_ancestors(Natural(7), Rule::three(), 4) == std::vector<AncestorEntry>{{2, 9}, {4, 37}});
  CHECK(govlab::odd_ancestors(Natural(21), Rule::three(), 30).empty());
  CHECK_THROWS_AS(govlab::odd_ancestors(Natural(4), Rule::three(), 4), govlab::DomainError);
}

TEST_CASE("odd_ancestors: complete against modular oracle and sound by replay") {
  std::mt19937_64 rng(4242);
  for (const Rule& rule : {Rule::three(), Rule::five()}) {
    for (int n = 0; n < 300; ++n) {
      const Natural x = testing_support::random_odd(rng, 120);
      const auto got = govlab::odd_ancestors(x, rule, 40);
      const auto want = oracle::ancestors(x.mpz(), rule.multiplier(), 40);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        REQUIRE(got[k].doublings == want[k].first);
        REQUIRE(got[k].ancestor.mpz() == want[k].second);
        // one odd step then exactly i even steps lands on x
        Natural v = govlab::odd_step(got[k].ancestor, rule);
        for (std::size_t i = 0; i < got[k].doublings; ++i) v = govlab::even_step(v);
        REQUIRE(v == x);
      }
    }
  }
}

TEST_CASE("ancestor_tree examples") {
  const auto root = govlab::ancestor_tree(Natural(1), Rule::three(), 2, 8);
  std::vector<Natural> kids;
  for (const auto& c : root.children) kids.push_back(c.value);
  CHECK(kids == std::vector<Natural>{1, 5, 21, 85});
  bool has13 = false;
  for (const auto& c : root.children) {
    for (const auto& g : c.children) has13 = has13 || g.value == Natural(13);
  }
  CHECK(has13);
  const auto& five = root.children[1];
  std::vector<Natural> of5;
  for (const auto& g : five.children) of5.push_back(g.value);
  CHECK(of5 == std::vector<Natural>{3, 13, 53, 213});

  const auto t13 = govlab::ancestor_tree(Natural(13), Rule::five(), 1, 4);
  REQUIRE(t13.children.size() == 1);
  CHECK(t13.children[0].value == Natural(5));
  CHECK(t13.children[0].governor_index == 1);
  CHECK(t13.children[0].trivial);

  CHECK_THROWS_AS(govlab::ancestor_tree(Natural(13), Rule::five(), 0, 4), govlab::DomainError);
}

TEST_CASE("ancestor_tree annotations and per-level dedup") {
  const Rule rule = Rule::five();
  const auto root = govlab::ancestor_tree(Natural(13), rule, 4, 24);
  std::vector<const govlab::AncestorNode*> level{&root};
  while (!level.empty()) {
    std::vector<const govlab::AncestorNode*> next;
    std::set<Natural> seen;
    for (const auto* n : level) {
      REQUIRE(n->governor_index == govlab::governor_index(n->value));
      REQUIRE(n->trivial == rule.trivial_indices().contains(n->governor_index));
      REQUIRE(seen.insert(n->value).second);
      for (const auto& c : n->children) next.push_back(&c);
    }
    level = std::move(next);
  }
}

TEST_CASE("condition solver reproduces the tabulated solution sets") {
  CHECK(govlab::solve_ancestor_conditions(Rule::three(), 64, 64) == std::vector<ConditionSolution>{{1, 1, 2}});
  CHECK(govlab::solve_ancestor_conditions(Rule::five(), 64, 64) ==
        std::vector<ConditionSolution>{{2, 1, 1}, {1, 2, 4}});
  for (const Rule& rule : {Rule::three(), Rule::five()}) {
    for (const auto& s : govlab::solve_ancestor_conditions(rule, 64, 64)) {
      CHECK(s.term_count != 3);
      CHECK(govlab::condition_lhs(rule, s.mu) == govlab::condition_rhs(s.term_count, s.i));
    }
  }
  CHECK_THROWS_AS(govlab::solve_ancestor_conditions(Rule::three(), 0, 64), govlab::RangeError);
}

TEST_CASE("condition solver against brute-force integer search") {
  // (2^mu - 1) q + 1 with mu, i <= 20 fits easily in 64 bits
  for (unsigned long q : {3UL, 5UL}) {
    std::vector<ConditionSolution> want;
    for (int terms = 3; terms >= 1; --terms) {
      const unsigned long mult = terms == 3 ? 7 : (terms == 2 ? 3 : 1);
      for (unsigned long mu = 1; mu <= 20; ++mu) {
        for (unsigned long i = 1; i <= 20; ++i) {
          if (((1UL << mu) - 1) * q + 1 == mult << i) want.push_back({terms, mu, i});
        }
      }
    }
    CHECK(govlab::solve_ancestor_conditions(Rule::from_multiplier(q), 20, 20) == want);
  }
}
