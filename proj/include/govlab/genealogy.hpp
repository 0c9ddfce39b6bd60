#pragma once

#include <cstddef>
#include <vector>

#include "govlab/natural.hpp"
#include "govlab/rule.hpp"

namespace govlab {

/// Odd preimage: q * ancestor + 1 == 2^doublings * x.
struct AncestorEntry {
  std::size_t doublings;
  Natural ancestor;

  friend bool operator==(const AncestorEntry&, const AncestorEntry&) = default;
};

/// 2^i * x. Throws DomainError for i == 0.
Natural even_ancestor(const Natural& x, std::size_t i);

/// All odd ancestors reachable with 1..max_doublings halvings, ascending in i.
std::vector<AncestorEntry> odd_ancestors(const Natural& x, const Rule& rule, std::size_t max_doublings);

struct AncestorNode {
  Natural value;
  std::size_t doublings = 0;  // 0 for the root
  std::size_t governor_index = 0;
  bool trivial = false;  // governor_index is a trivial index of the rule
  std::vector<AncestorNode> children;
};

/// Ancestor tree of the given depth rooted at x. A value appearing twice on the
/// same level is kept only at its first occurrence (parents in order, then
/// ascending doublings). Throws DomainError for depth == 0 or even x.
AncestorNode ancestor_tree(const Natural& x, const Rule& rule, std::size_t depth, std::size_t max_doublings);

struct ConditionSolution {
  int term_count;  // 1, 2 or 3
  std::size_t mu;
  std::size_t i;

  friend bool operator==(const ConditionSolution&, const ConditionSolution&) = default;
  friend auto operator<=>(const ConditionSolution&, const ConditionSolution&) = default;
};

/// Exhaustive search over 1 <= mu <= mu_max, 1 <= i <= i_max of
///   (2^mu - 1) * q + 1  ==  2^(i+2) + 2^(i+1) + 2^i   (three terms)
///                       ==  2^(i+1) + 2^i             (two terms)
///                       ==  2^i                       (one term)
/// Results are ordered by term count descending, then mu, then i.
std::vector<ConditionSolution> solve_ancestor_conditions(const Rule& rule, std::size_t mu_max, std::size_t i_max);

/// Right-hand side of the term_count equation.
Natural condition_rhs(int term_count, std::size_t i);
/// Left-hand side (2^mu - 1) * q + 1.
Natural condition_lhs(const Rule& rule, std::size_t mu);

}  // namespace govlab
