#include <benchmark/benchmark.h>

#include "bunpic/sweep.hpp"

using namespace bunpic;

namespace {

void BM_TorusGrid(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  const auto pts = torus_grid(5, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_torus_grid(pts, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * pts.size()));
}

void BM_GoldenTable(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  const auto cases = golden_cases();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_golden(cases, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * cases.size()));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_TorusGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GoldenTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
