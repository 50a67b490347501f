#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "permpat/permpat.hpp"

using namespace permpat;

namespace {

Permutation random_permutation(int n, unsigned seed) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

void BM_CountNaive(benchmark::State& state) {
  const auto pi = random_permutation(static_cast<int>(state.range(0)), 1);
  const Pattern alpha{1, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(count_occurrences(pi, alpha));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountNaive)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CountFast(benchmark::State& state) {
  const auto pi = random_permutation(static_cast<int>(state.range(0)), 1);
  const Pattern alpha{1, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(count_len3_fast(pi, alpha));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountFast)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_AvoidsEarlyExit(benchmark::State& state) {
  const auto pi = random_permutation(static_cast<int>(state.range(0)), 2);
  const Pattern alpha{1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(avoids(pi, alpha));
}
BENCHMARK(BM_AvoidsEarlyExit)->Range(16, 256);

void BM_EnumerateCount(benchmark::State& state) {
  const auto spec = parse_spec("(;132,213)");
  const EnumerationOptions opts{.threads = static_cast<unsigned>(state.range(1)),
                                .kernel = state.range(2) ? CountKernel::fast3 : CountKernel::naive};
  for (auto _ : state) benchmark::DoNotOptimize(count(static_cast<int>(state.range(0)), spec, opts));
}
BENCHMARK(BM_EnumerateCount)
    ->ArgNames({"n", "threads", "fast"})
    ->Args({8, 1, 0})
    ->Args({8, 1, 1})
    ->Args({9, 1, 0})
    ->Args({9, 0, 0})
    ->Args({9, 0, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
