#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "govlab/natural.hpp"
#include "govlab/rule.hpp"

namespace govlab {

enum class StepKind { Odd, Even };

constexpr char step_letter(StepKind k) { return k == StepKind::Odd ? 'O' : 'E'; }

struct OrbitLimits {
  std::size_t max_steps = 1'000'000;
  std::size_t max_value_bits = 4096;

  /// Throws ValidationError unless both limits are >= 1.
  void validate() const;
};

enum class Termination { ReachedTrivialCycle, EnteredCycle, StepLimit, ValueLimit };

std::string_view termination_name(Termination t);

struct OrbitStep {
  Natural value;
  StepKind kind;
};

struct OddGovernor {
  Natural value;
  std::size_t governor_index;
};

struct OrbitTrace {
  Natural start;
  /// Values produced by each step, in order; the start value is not repeated here.
  std::vector<OrbitStep> steps;
  /// Every odd value encountered (start included) with its Governor index.
  std::vector<OddGovernor> odd_governors;
  Termination termination = Termination::StepLimit;
  /// Members of the cycle entered, starting at the repeated value. Only set for EnteredCycle.
  std::vector<Natural> cycle_members;

  std::size_t odd_step_count() const;
  std::size_t max_bit_length() const;
};

/// q*x + 1. Throws DomainError for even x.
Natural odd_step(const Natural& x, const Rule& rule);
/// x / 2. Throws DomainError for odd x.
Natural even_step(const Natural& x);

struct NextOdd {
  Natural value;
  std::size_t even_steps;
};

/// Accelerated odd-to-odd map: (q*x + 1) / 2^k with k = v2(q*x + 1).
NextOdd next_odd(const Natural& x, const Rule& rule);

/// Iterates the rule from an odd start. Limit breaches are termination reasons,
/// not errors. Checks on every new value, in order: value limit, trivial-cycle
/// membership, repetition, step limit.
OrbitTrace orbit(const Natural& x, const Rule& rule, const OrbitLimits& limits);

/// Governor indices of the first `n_odd` odd values of the accelerated orbit
/// starting with x.
std::vector<std::size_t> governor_trace(const Natural& x, const Rule& rule, std::size_t n_odd);

struct DescentCheck {
  std::size_t governor_index = 0;
  std::size_t expected_index = 0;
  std::size_t observed_index = 0;
  std::size_t expected_even_steps = 0;
  std::size_t observed_even_steps = 0;
  Natural next;
  bool pass = false;
};

/// Checks the exact descent law for one transition. Throws DomainError when
/// governor_index(x) lies in the trivial range of the rule.
DescentCheck verify_descent(const Natural& x, const Rule& rule);

struct Promotion {
  Natural from;
  Natural to;
  std::size_t old_index;
  std::size_t new_index;

  friend bool operator==(const Promotion&, const Promotion&) = default;
};

/// Odd-to-odd transitions (at most `horizon`) whose Governor index strictly increases.
std::vector<Promotion> find_promotions(const Natural& x, const Rule& rule, std::size_t horizon);

}  // namespace govlab
