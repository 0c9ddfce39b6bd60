#include "govlab/genealogy.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "govlab/errors.hpp"
#include "govlab/numerics.hpp"

namespace govlab {

Natural even_ancestor(const Natural& x, std::size_t i) {
  if (i == 0) throw DomainError("even ancestor needs at least one doubling");
  return x << i;
}

std::vector<AncestorEntry> odd_ancestors(const Natural& x, const Rule& rule, std::size_t max_doublings) {
  if (!x.is_odd()) throw DomainError("odd_ancestors requires an odd value, got " + x.to_decimal());
  const std::uint64_t q = rule.multiplier();
  std::vector<AncestorEntry> out;
  Natural twice = x;
  for (std::size_t i = 1; i <= max_doublings; ++i) {
    twice = twice << 1;
    // 2^i x - 1 is odd, so an integral quotient by odd q is odd
    if (twice.mod_small(q) == 1) out.push_back({i, (twice - Natural(1)).div_small(q)});
  }
  return out;
}

AncestorNode ancestor_tree(const Natural& x, const Rule& rule, std::size_t depth, std::size_t max_doublings) {
  if (depth == 0) throw DomainError("ancestor tree depth must be >= 1");
  const auto annotate = [&rule](AncestorNode& n) {
    n.governor_index = governor_index(n.value);
    n.trivial = rule.trivial_indices().contains(n.governor_index);
  };

  AncestorNode root;
  root.value = x;
  annotate(root);

  std::vector<AncestorNode*> level{&root};
  for (std::size_t d = 0; d < depth; ++d) {
    std::unordered_set<Natural> on_level;
    for (AncestorNode* parent : level) {
      for (auto& e : odd_ancestors(parent->value, rule, max_doublings)) {
        if (!on_level.insert(e.ancestor).second) continue;
        AncestorNode child;
        child.value = std::move(e.ancestor);
        child.doublings = e.doublings;
        annotate(child);
        parent->children.push_back(std::move(child));
      }
    }
    std::vector<AncestorNode*> next;
    for (AncestorNode* parent : level) {
      for (auto& c : parent->children) next.push_back(&c);
    }
    level = std::move(next);
  }
  return root;
}

Natural condition_rhs(int term_count, std::size_t i) {
  switch (term_count) {
    case 1: return Natural::pow2(i);
    case 2: return Natural::pow2(i + 1) + Natural::pow2(i);
    case 3: return Natural::pow2(i + 2) + Natural::pow2(i + 1) + Natural::pow2(i);
    default: throw DomainError("term count must be 1, 2 or 3");
  }
}

Natural condition_lhs(const Rule& rule, std::size_t mu) {
  return Natural::mersenne(mu).mul_add_one(rule.multiplier());
}

std::vector<ConditionSolution> solve_ancestor_conditions(const Rule& rule, std::size_t mu_max, std::size_t i_max) {
  if (mu_max < 1 || i_max < 1) throw RangeError("solver bounds must be >= 1");
  std::vector<ConditionSolution> out;
  for (int terms = 3; terms >= 1; --terms) {
    for (std::size_t mu = 1; mu <= mu_max; ++mu) {
      const Natural lhs = condition_lhs(rule, mu);
      for (std::size_t i = 1; i <= i_max; ++i) {
        if (lhs == condition_rhs(terms, i)) out.push_back({terms, mu, i});
      }
    }
  }
  return out;
}

}  // namespace govlab
