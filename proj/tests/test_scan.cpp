#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "govlab/errors.hpp"
#include "govlab/json_io.hpp"
#include "govlab/numerics.hpp"
#include "govlab/scan.hpp"
#include "oracle.hpp"

using govlab::Natural;
using govlab::Rule;
using govlab::ScanConfig;
using govlab::ScanControl;

namespace {

ScanConfig config(std::uint64_t q, Natural lo, Natural hi, std::size_t steps, std::size_t bits,
                  std::size_t chunk = govlab::kDefaultChunkSize) {
  ScanConfig c;
  c.rule = Rule::from_multiplier(q);
  c.lo = std::move(lo);
  c.hi = std::move(hi);
  c.limits = {steps, bits};
  c.chunk_size = chunk;
  return c;
}

std::string doc(const govlab::ScanReport& r) { return govlab::to_document(govlab::to_json(r)); }

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("govlab_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("fast kernel agrees with the GMP reference") {
  SUBCASE("3Z+1, generous limits") {
    const auto c = config(3, 1, 8191, 1'000'000, 4096);
    CHECK(doc(govlab::scan_range(c, ScanControl{4, {}, {}}).report) == doc(govlab::scan_range_reference(c)));
  }
  SUBCASE("5Z+1 with a 128-bit cap") {
    const auto c = config(5, 1, 2047, 100'000, 128);
    CHECK(doc(govlab::scan_range(c, ScanControl{4, {}, {}}).report) == doc(govlab::scan_range_reference(c)));
  }
  SUBCASE("5Z+1 with a cap above 128 bits forces the fallback path") {
    const auto c = config(5, 1, 255, 100'000, 180);
    CHECK(doc(govlab::scan_range(c, ScanControl{3, {}, {}}).report) == doc(govlab::scan_range_reference(c)));
  }
  SUBCASE("tight step limit produces StepLimit outcomes") {
    const auto c = config(3, 1, 4095, 60, 4096);
    const auto r = govlab::scan_range(c, ScanControl{2, {}, {}}).report;
    CHECK(r.counts.undecided_step_limit > 0);
    CHECK(doc(r) == doc(govlab::scan_range_reference(c)));
  }
  SUBCASE("seeds beyond 128 bits use the reference path") {
    const Natural lo = Natural::pow2(130) + Natural(1);
    const auto c = config(3, lo, lo + Natural(126), 1'000'000, 4096);
    const auto r = govlab::scan_range(c, ScanControl{2, {}, {}}).report;
    CHECK(r.counts.converged_trivial == 64);
    CHECK(doc(r) == doc(govlab::scan_range_reference(c)));
  }
}

TEST_CASE("per-seed outcomes match a brute-force walk") {
  const Rule rule = Rule::five();
  for (std::uint64_t s = 1; s < 600; s += 2) {
    const auto w = oracle::walk(s, 5, 2000, 64);
    const auto fast = govlab::detail::fast_outcome(s, rule, {2000, 64});
    REQUIRE(fast.has_value());
    switch (w.end) {
      case oracle::End::Trivial: REQUIRE(fast->kind == govlab::OutcomeKind::ConvergedTrivial); break;
      case oracle::End::Cycle: {
        REQUIRE(fast->kind == govlab::OutcomeKind::Cycle);
        std::set<Natural> members;
        for (const auto& m : w.cycle) members.insert(Natural(m));
        REQUIRE(std::set<Natural>(fast->cycle.all_members.begin(), fast->cycle.all_members.end()) == members);
        break;
      }
      case oracle::End::Steps: REQUIRE(fast->reason == govlab::Termination::StepLimit); break;
      case oracle::End::Bits: REQUIRE(fast->reason == govlab::Termination::ValueLimit); break;
    }
    REQUIRE(fast->steps + 1 == w.values.size());
  }
}

TEST_CASE("scan examples") {
  SUBCASE("5Z+1 up to 2^17") {
    const auto r = govlab::scan_range(1, Natural::mersenne(17), Rule::five(), {100'000, 128}, 4);
    std::set<Natural> smallest;
    for (const auto& t : r.cycles) smallest.insert(t.cycle.smallest_odd);
    CHECK(smallest == std::set<Natural>{1, 13, 17});
    CHECK(r.counts.total() == r.seeds);
    CHECK(r.seeds == 65536);
    CHECK(r.divergence_candidates.size() == r.counts.undecided_step_limit + r.counts.undecided_value_limit);
  }
  SUBCASE("3Z+1 up to 2^16 has only the trivial cycle") {
    const auto r = govlab::scan_range(1, Natural::mersenne(16), Rule::three(), {1'000'000, 4096}, 4);
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0].cycle.classification == govlab::CycleClass::Trivial);
    CHECK(r.counts.converged_trivial == r.seeds);
    CHECK(r.divergence_candidates.empty());
  }
  SUBCASE("5Z+1 up to 31: auxiliary odd members carry indices 1 or 2") {
    const auto r = govlab::scan_range(1, 31, Rule::five(), {100'000, 128}, 2);
    bool saw_aux = false;
    for (const auto& t : r.cycles) {
      REQUIRE(govlab::cycle_is_closed(t.cycle, Rule::five()));
      if (t.cycle.classification != govlab::CycleClass::Auxiliary) continue;
      saw_aux = true;
      for (const auto& g : t.cycle.governor_indices) {
        CHECK((g.governor_index == 1 || g.governor_index == 2));
        CHECK(g.governor_index == govlab::governor_index(g.value));
      }
    }
    CHECK(saw_aux);
  }
}

TEST_CASE("report is independent of worker count and chunk size") {
  const auto base = config(5, 1, 32767, 100'000, 128, 4096);
  const std::string one = doc(govlab::scan_range(base, ScanControl{1, {}, {}}).report);
  CHECK(one == doc(govlab::scan_range(base, ScanControl{8, {}, {}}).report));
  auto other = base;
  other.chunk_size = 1000;
  CHECK(one == doc(govlab::scan_range(other, ScanControl{3, {}, {}}).report));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config(3, 2, 9, 10, 10).validate(), govlab::ValidationError);
  CHECK_THROWS_AS(config(3, 9, 7, 10, 10).validate(), govlab::ValidationError);
  CHECK_THROWS_AS(config(3, 1, 9, 0, 10).validate(), govlab::ValidationError);
  CHECK_THROWS_AS(config(3, 1, 9, 10, 10, 0).validate(), govlab::ValidationError);
  CHECK(config(3, 1, 9, 10, 10).seed_count() == 5);
  CHECK(config(3, 1, 9, 10, 10, 2).chunk_count() == 3);
  CHECK(config(3, 5, 5, 10, 10).seed_count() == 1);
}

TEST_CASE("checkpoint resume yields the uninterrupted report") {
  const auto c = config(5, 1, 8191, 100'000, 128, 512);
  const std::string uninterrupted = doc(govlab::scan_range(c, ScanControl{4, {}, {}}).report);
  const auto path = temp_path("resume.json");

  auto partial = govlab::scan_range(c, ScanControl{4, path, 3});
  CHECK_FALSE(partial.complete);
  CHECK(partial.chunks_done == 3);
  REQUIRE(std::filesystem::exists(path));
  const auto saved = govlab::checkpoint_load(path);
  CHECK(saved.completed_chunks == std::set<std::size_t>{0, 1, 2});

  partial = govlab::scan_range(c, ScanControl{2, path, 2});
  CHECK(partial.chunks_done == 5);
  const auto finished = govlab::scan_range(c, ScanControl{8, path, std::nullopt});
  CHECK(finished.complete);
  CHECK(doc(finished.report) == uninterrupted);

  // loading a completed checkpoint yields the final report directly
  const auto again = govlab::scan_range(c, ScanControl{1, path, 0});
  CHECK(again.complete);
  CHECK(doc(again.report) == uninterrupted);
  std::filesystem::remove(path);
}

TEST_CASE("checkpoint load errors") {
  const auto c = config(3, 1, 1023, 1000, 256, 128);
  const auto path = temp_path("errors.json");
  govlab::scan_range(c, ScanControl{2, path, 1});

  SUBCASE("wrong schema version") {
    auto j = govlab::Json::parse(std::ifstream(path));
    j["schema_version"] = 99;
    std::ofstream(path) << j.dump();
    CHECK_THROWS_AS(govlab::checkpoint_load(path), govlab::CheckpointError);
  }
  SUBCASE("corrupt content") {
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(govlab::checkpoint_load(path), govlab::CheckpointError);
  }
  SUBCASE("tampered cycle fails replay") {
    auto j = govlab::Json::parse(std::ifstream(path));
    j["accumulated"]["cycles"][0]["all_members"] = govlab::Json::array({"1", "4", "3"});
    std::ofstream(path) << j.dump();
    CHECK_THROWS_AS(govlab::checkpoint_load(path), govlab::CheckpointError);
  }
  SUBCASE("different configuration") {
    auto other = c;
    other.limits.max_steps = 999;
    CHECK_THROWS_AS(govlab::scan_range(other, ScanControl{1, path, std::nullopt}), govlab::CheckpointError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(govlab::checkpoint_load(temp_path("absent.json")), govlab::CheckpointError);
  }
  std::filesystem::remove(path);
}
