#include <doctest.h>

#include "govlab/cycles.hpp"
#include "govlab/errors.hpp"
#include "oracle.hpp"

using govlab::CycleClass;
using govlab::Natural;
using govlab::OutcomeKind;
using govlab::Rule;

TEST_CASE("canonical_cycle examples") {
  const auto t = govlab::canonical_cycle({4, 2, 1}, Rule::three());
  CHECK(t.all_members == std::vector<Natural>{1, 4, 2});
  CHECK(t.smallest_odd == Natural(1));
  CHECK(t.classification == CycleClass::Trivial);

  const auto a = govlab::canonical_cycle({83, 416, 208, 104, 52, 26, 13, 66, 33, 166}, Rule::five());
  CHECK(a.smallest_odd == Natural(13));
  CHECK(a.all_members.front() == Natural(13));
  CHECK(a.odd_members == std::vector<Natural>{13, 33, 83});
  REQUIRE(a.governor_indices.size() == 3);
  CHECK(a.governor_indices[0].governor_index == 1);
  CHECK(a.governor_indices[1].governor_index == 1);
  CHECK(a.governor_indices[2].governor_index == 2);

  CHECK_THROWS_AS(govlab::canonical_cycle({}, Rule::three()), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::canonical_cycle({4, 2}, Rule::three()), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::canonical_cycle({13, 66, 33}, Rule::five()), govlab::ValidationError);
  CHECK_THROWS_AS(govlab::canonical_cycle({4, 2, 1, 4, 2, 1}, Rule::three()), govlab::ValidationError);
}

TEST_CASE("classify_cycle") {
  const auto t3 = govlab::canonical_cycle(Rule::three().trivial_cycle(), Rule::three());
  CHECK(govlab::classify_cycle(t3, Rule::three()) == CycleClass::Trivial);
  const auto aux = govlab::canonical_cycle({13, 66, 33, 166, 83, 416, 208, 104, 52, 26}, Rule::five());
  CHECK(govlab::classify_cycle(aux, Rule::five()) == CycleClass::Auxiliary);
  const auto t5 = govlab::canonical_cycle({3, 16, 8, 4, 2, 1, 6}, Rule::five());
  CHECK(t5.odd_members == std::vector<Natural>{1, 3});
  CHECK(govlab::classify_cycle(t5, Rule::five()) == CycleClass::Trivial);
  CHECK(govlab::cycle_is_closed(t5, Rule::five()));
}

TEST_CASE("detect_outcome examples") {
  const govlab::OrbitLimits generous{1'000'000, 4096};
  CHECK(govlab::detect_outcome(Natural(27), Rule::three(), generous).kind == OutcomeKind::ConvergedTrivial);

  // 17 -> 86 -> 43 -> 216 -> 108 -> 54 -> 27 -> 136 -> 68 -> 34 -> 17
  const auto w = oracle::walk(17, 5, 1000, 4096);
  REQUIRE(w.end == oracle::End::Cycle);
  CHECK(w.cycle.size() == 10);
  const auto o17 = govlab::detect_outcome(Natural(17), Rule::five(), generous);
  REQUIRE(o17.kind == OutcomeKind::Cycle);
  CHECK(o17.cycle.odd_members == std::vector<Natural>{17, 27, 43});
  CHECK(o17.cycle.classification == CycleClass::Auxiliary);
  CHECK(govlab::cycle_is_closed(o17.cycle, Rule::five()));

  const auto o7 = govlab::detect_outcome(Natural(7), Rule::five(), {1'000'000, 64});
  CHECK(o7.kind == OutcomeKind::Undecided);
  CHECK(o7.reason == govlab::Termination::ValueLimit);

  const auto s = govlab::detect_outcome(Natural(27), Rule::three(), {50, 4096});
  CHECK(s.kind == OutcomeKind::Undecided);
  CHECK(s.reason == govlab::Termination::StepLimit);
  CHECK(s.steps == 50);
}
