#include <benchmark/benchmark.h>

#include "tempcal/tempcal.hpp"

namespace {

using namespace tempcal;

LogitDataset make(std::size_t n, std::size_t k) { return generate({n, k, 2.5, 2.0, 1}); }

void BM_TemperedSoftmax(benchmark::State& state) {
  const LogitDataset d = make(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(tempered_softmax(d, 1.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TemperedSoftmax)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_TsObjective(benchmark::State& state) {
  const LogitDataset d = make(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(ts_objective(d, 1.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TsObjective)->Arg(10'000)->Arg(100'000);

void BM_UtsLoss(benchmark::State& state) {
  const LogitDataset d = make(static_cast<std::size_t>(state.range(0)), 10);
  const ConfidenceMatrix p = tempered_softmax(d, 1.0);
  const ClassSubsets s = build_subsets(p, compute_thresholds(p));
  for (auto _ : state) benchmark::DoNotOptimize(uts_loss(d, s, 1.7));
}
BENCHMARK(BM_UtsLoss)->Arg(10'000)->Arg(100'000);

void BM_FitTs(benchmark::State& state) {
  const LogitDataset d = make(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(fit_ts(d));
}
BENCHMARK(BM_FitTs)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_FitUts(benchmark::State& state) {
  const LogitDataset d = make(static_cast<std::size_t>(state.range(0)), 10).without_labels();
  for (auto _ : state) benchmark::DoNotOptimize(fit_uts(d));
}
BENCHMARK(BM_FitUts)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_Ece(benchmark::State& state) {
  const LogitDataset d = make(100'000, 10);
  const ConfidenceMatrix p = tempered_softmax(d, 1.0);
  const auto y = d.require_labels();
  for (auto _ : state) benchmark::DoNotOptimize(ece(p, y, 15));
}
BENCHMARK(BM_Ece);

}  // namespace

BENCHMARK_MAIN();
