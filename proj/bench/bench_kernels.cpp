// Serial reference vs OpenMP kernels, plus the single-step NAR cost that the
// fuzzer's throughput depends on.

#include <benchmark/benchmark.h>

#include "rowmotion/kernels.hpp"
#include "rowmotion/sampling.hpp"

using namespace rowmotion;

static void BM_NarStep(benchmark::State& state) {
  const Poset p = product_of_chains(3, 3);
  auto s = sample_matp(p, static_cast<int>(state.range(0)), 11);
  const auto mode = state.range(1) ? RowmotionMode::Toggles : RowmotionMode::Transfer;
  auto g = s.labels;
  for (auto _ : state) {
    g = antichain_rowmotion(p, s.realm, g, mode);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NarStep)->ArgsProduct({{1, 2, 3}, {0, 1}})->ArgNames({"d", "toggles"});

static void BM_FuzzCell(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    auto cell = fuzz_nar_periodicity(3, 3, 2, 100, 5, exec);
    benchmark::DoNotOptimize(cell);
  }
  state.SetItemsProcessed(state.iterations() * 100 * 6);
}
BENCHMARK(BM_FuzzCell)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_PlHomomesy(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    auto rep = pl_homomesy_report(2, 3, 200, 5, exec);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_PlHomomesy)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_NcCrossCheck(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    auto rep = nc_crosscheck(3, 3, 2, 20, 5, exec);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_NcCrossCheck)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
