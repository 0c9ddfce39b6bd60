#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "govlab/dynamics.hpp"
#include "govlab/natural.hpp"
#include "govlab/rule.hpp"

namespace govlab {

enum class CycleClass { Trivial, Auxiliary };

std::string_view cycle_class_name(CycleClass c);

struct CycleRecord {
  std::vector<Natural> odd_members;  // ascending
  std::vector<Natural> all_members;  // starts at smallest_odd, in step order
  CycleClass classification = CycleClass::Auxiliary;
  Natural smallest_odd;
  std::vector<OddGovernor> governor_indices;  // per odd member, ascending

  friend bool operator==(const CycleRecord& a, const CycleRecord& b) {
    return a.all_members == b.all_members && a.classification == b.classification;
  }
};

/// Canonicalizes a closed cycle: rotates it to start at its smallest odd
/// member and fills the derived fields. Throws ValidationError for an empty,
/// non-closed or self-intersecting member list.
CycleRecord canonical_cycle(const std::vector<Natural>& members, const Rule& rule);

/// Trivial iff the cycle equals the rule's trivial cycle up to rotation.
CycleClass classify_cycle(const CycleRecord& c, const Rule& rule);

/// Replays the cycle through the step functions.
bool cycle_is_closed(const CycleRecord& c, const Rule& rule);

enum class OutcomeKind { ConvergedTrivial, Cycle, Undecided };

struct Outcome {
  OutcomeKind kind = OutcomeKind::Undecided;
  CycleRecord cycle;                           // kind == Cycle
  Termination reason = Termination::StepLimit;  // kind == Undecided: StepLimit or ValueLimit
  std::size_t steps = 0;
  std::size_t max_bits = 0;
};

/// Reference classification built on `orbit`.
Outcome detect_outcome(const Natural& x, const Rule& rule, const OrbitLimits& limits);

}  // namespace govlab
