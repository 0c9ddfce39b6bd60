#include "govlab/cycles.hpp"

#include <algorithm>
#include <unordered_set>

#include "govlab/errors.hpp"
#include "govlab/numerics.hpp"

namespace govlab {
namespace {

Natural step(const Natural& v, const Rule& rule) { return v.is_odd() ? v.mul_add_one(rule.multiplier()) : v >> 1; }

}  // namespace

std::string_view cycle_class_name(CycleClass c) { return c == CycleClass::Trivial ? "Trivial" : "Auxiliary"; }

bool cycle_is_closed(const CycleRecord& c, const Rule& rule) {
  const auto& m = c.all_members;
  if (m.empty()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(step(m[i], rule) == m[(i + 1) % m.size()])) return false;
  }
  return true;
}

CycleRecord canonical_cycle(const std::vector<Natural>& members, const Rule& rule) {
  if (members.empty()) throw ValidationError("cycle has no members");
  std::unordered_set<Natural> distinct(members.begin(), members.end());
  if (distinct.size() != members.size()) throw ValidationError("cycle members repeat");

  auto smallest = members.end();
  for (auto it = members.begin(); it != members.end(); ++it) {
    if (it->is_odd() && (smallest == members.end() || *it < *smallest)) smallest = it;
  }
  if (smallest == members.end()) throw ValidationError("cycle has no odd member");

  CycleRecord c;
  c.all_members.assign(smallest, members.end());
  c.all_members.insert(c.all_members.end(), members.begin(), smallest);
  if (!cycle_is_closed(c, rule)) throw ValidationError("members do not form a closed cycle under " + rule.id());

  for (const auto& v : c.all_members) {
    if (v.is_odd()) c.odd_members.push_back(v);
  }
  std::sort(c.odd_members.begin(), c.odd_members.end());
  c.smallest_odd = c.odd_members.front();
  for (const auto& v : c.odd_members) c.governor_indices.push_back({v, governor_index(v)});
  c.classification = classify_cycle(c, rule);
  return c;
}

CycleClass classify_cycle(const CycleRecord& c, const Rule& rule) {
  const auto& t = rule.trivial_cycle();
  const auto& m = c.all_members;
  if (m.size() != t.size()) return CycleClass::Auxiliary;
  const auto start = std::find(t.begin(), t.end(), m.front());
  if (start == t.end()) return CycleClass::Auxiliary;
  const auto offset = static_cast<std::size_t>(start - t.begin());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m[i] == t[(offset + i) % t.size()])) return CycleClass::Auxiliary;
  }
  return CycleClass::Trivial;
}

Outcome detect_outcome(const Natural& x, const Rule& rule, const OrbitLimits& limits) {
  const OrbitTrace t = orbit(x, rule, limits);
  Outcome o;
  o.steps = t.steps.size();
  o.max_bits = t.max_bit_length();
  switch (t.termination) {
    case Termination::ReachedTrivialCycle:
      o.kind = OutcomeKind::ConvergedTrivial;
      break;
    case Termination::EnteredCycle:
      o.kind = OutcomeKind::Cycle;
      o.cycle = canonical_cycle(t.cycle_members, rule);
      break;
    case Termination::StepLimit:
    case Termination::ValueLimit:
      o.kind = OutcomeKind::Undecided;
      o.reason = t.termination;
      break;
  }
  return o;
}

}  // namespace govlab
