// Serial reference kernels against the OpenMP ones.
//   distlap_bench --benchmark_filter=Extremal

#include <benchmark/benchmark.h>

#include "distlap/enumerate.hpp"
#include "distlap/verify.hpp"

using namespace distlap;

namespace {

const std::vector<Graph>& trees_of_order(int n) {
  static std::vector<std::vector<Graph>> cache(21);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (slot.empty()) slot = free_trees(n);
  return slot;
}

void BM_RadiiSerial(benchmark::State& state) {
  const auto& ts = trees_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_spectral_radii_serial(ts, Objective::RhoL));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(ts.size()));
}

void BM_RadiiParallel(benchmark::State& state) {
  const auto& ts = trees_of_order(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_spectral_radii(ts, Objective::RhoL, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(ts.size()));
}

void BM_ExtremalSerial(benchmark::State& state) {
  const ClassQuery q{GraphClass::Trees, static_cast<int>(state.range(0)), 4};
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search_serial(q, Objective::RhoQ));
}

void BM_ExtremalParallel(benchmark::State& state) {
  const ClassQuery q{GraphClass::Trees, static_cast<int>(state.range(0)), 4};
  const ExecPolicy policy{static_cast<int>(state.range(1)), 256};
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search(q, Objective::RhoQ, policy));
}

}  // namespace

BENCHMARK(BM_RadiiSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RadiiParallel)->ArgsProduct({{12, 14}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExtremalSerial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExtremalParallel)->ArgsProduct({{14, 16}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
