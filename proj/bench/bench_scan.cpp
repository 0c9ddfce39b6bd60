// Serial reference scan against the OpenMP scan on fixed ranges.

#include <benchmark/benchmark.h>

#include "govlab/scan.hpp"

namespace {

govlab::ScanConfig config(std::uint64_t q, std::size_t bound_bits) {
  govlab::ScanConfig c;
  c.rule = govlab::Rule::from_multiplier(q);
  c.lo = govlab::Natural(1);
  c.hi = govlab::Natural::mersenne(bound_bits);
  c.limits = q == 3 ? govlab::OrbitLimits{1'000'000, 4096} : govlab::OrbitLimits{100'000, 128};
  return c;
}

void BM_ScanReference(benchmark::State& state) {
  const auto c = config(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(govlab::scan_range_reference(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.seed_count()));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto c = config(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const govlab::ScanControl control{static_cast<std::size_t>(state.range(2)), {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(govlab::scan_range(c, control));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.seed_count()));
}

}  // namespace

BENCHMARK(BM_ScanReference)->Args({3, 14})->Args({5, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)
    ->ArgsProduct({{3}, {14}, {1, 4, 8}})
    ->ArgsProduct({{5}, {12}, {1, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
