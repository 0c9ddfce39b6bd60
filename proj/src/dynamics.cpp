#include "govlab/dynamics.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "govlab/errors.hpp"
#include "govlab/numerics.hpp"

namespace govlab {

void OrbitLimits::validate() const {
  if (max_steps < 1) throw ValidationError("max_steps must be >= 1");
  if (max_value_bits < 1) throw ValidationError("max_value_bits must be >= 1");
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::ReachedTrivialCycle: return "ReachedTrivialCycle";
    case Termination::EnteredCycle: return "EnteredCycle";
    case Termination::StepLimit: return "StepLimit";
    case Termination::ValueLimit: return "ValueLimit";
  }
  return "?";
}

std::size_t OrbitTrace::odd_step_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const OrbitStep& s) { return s.kind == StepKind::Odd; }));
}

std::size_t OrbitTrace::max_bit_length() const {
  std::size_t best = start.bit_length();
  for (const auto& s : steps) best = std::max(best, s.value.bit_length());
  return best;
}

Natural odd_step(const Natural& x, const Rule& rule) {
  if (!x.is_odd()) throw DomainError("odd step applied to even value " + x.to_decimal());
  return x.mul_add_one(rule.multiplier());
}

Natural even_step(const Natural& x) {
  if (x.is_odd()) throw DomainError("even step applied to odd value " + x.to_decimal());
  return x >> 1;
}

NextOdd next_odd(const Natural& x, const Rule& rule) {
  Natural y = odd_step(x, rule);
  const std::size_t k = v2(y);
  return {y >> k, k};
}

OrbitTrace orbit(const Natural& x, const Rule& rule, const OrbitLimits& limits) {
  if (!x.is_odd()) throw DomainError("orbit start must be odd, got " + x.to_decimal());
  limits.validate();

  OrbitTrace t;
  t.start = x;
  t.odd_governors.push_back({x, governor_index(x)});

  if (x.bit_length() > limits.max_value_bits) {
    t.termination = Termination::ValueLimit;
    return t;
  }
  if (rule.in_trivial_cycle(x)) {
    t.termination = Termination::ReachedTrivialCycle;
    return t;
  }

  // position 0 is the start, position s the value after step s
  std::unordered_map<Natural, std::size_t> seen;
  seen.emplace(x, 0);
  Natural cur = x;
  for (std::size_t s = 1;; ++s) {
    const StepKind kind = cur.is_odd() ? StepKind::Odd : StepKind::Even;
    cur = kind == StepKind::Odd ? odd_step(cur, rule) : even_step(cur);
    t.steps.push_back({cur, kind});
    if (cur.is_odd()) t.odd_governors.push_back({cur, governor_index(cur)});

    if (cur.bit_length() > limits.max_value_bits) {
      t.termination = Termination::ValueLimit;
      return t;
    }
    if (rule.in_trivial_cycle(cur)) {
      t.termination = Termination::ReachedTrivialCycle;
      return t;
    }
    const auto [it, fresh] = seen.emplace(cur, s);
    if (!fresh) {
      t.termination = Termination::EnteredCycle;
      const std::size_t first = it->second;
      if (first == 0) t.cycle_members.push_back(t.start);
      for (std::size_t p = std::max<std::size_t>(first, 1); p < s; ++p) t.cycle_members.push_back(t.steps[p - 1].value);
      return t;
    }
    if (s >= limits.max_steps) {
      t.termination = Termination::StepLimit;
      return t;
    }
  }
}

std::vector<std::size_t> governor_trace(const Natural& x, const Rule& rule, std::size_t n_odd) {
  std::vector<std::size_t> out;
  if (n_odd == 0) return out;
  out.reserve(n_odd);
  out.push_back(governor_index(x));
  Natural cur = x;
  while (out.size() < n_odd) {
    cur = next_odd(cur, rule).value;
    out.push_back(governor_index(cur));
  }
  return out;
}

DescentCheck verify_descent(const Natural& x, const Rule& rule) {
  DescentCheck c;
  c.governor_index = governor_index(x);
  if (c.governor_index <= rule.max_trivial_index()) {
    throw DomainError("descent law needs governor index above " + std::to_string(rule.max_trivial_index()) +
                      ", got " + std::to_string(c.governor_index));
  }
  const auto [next, k] = next_odd(x, rule);
  c.expected_index = c.governor_index - rule.descent_delta();
  c.expected_even_steps = rule.descent_even_steps();
  c.observed_index = governor_index(next);
  c.observed_even_steps = k;
  c.next = next;
  c.pass = c.expected_index == c.observed_index && c.expected_even_steps == c.observed_even_steps;
  return c;
}

std::vector<Promotion> find_promotions(const Natural& x, const Rule& rule, std::size_t horizon) {
  std::vector<Promotion> out;
  Natural cur = x;
  std::size_t idx = governor_index(cur);
  for (std::size_t h = 0; h < horizon; ++h) {
    Natural nxt = next_odd(cur, rule).value;
    const std::size_t nidx = governor_index(nxt);
    if (nidx > idx) out.push_back({cur, nxt, idx, nidx});
    cur = std::move(nxt);
    idx = nidx;
  }
  return out;
}

}  // namespace govlab
