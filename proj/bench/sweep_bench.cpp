// Serial reference kernels against the OpenMP versions.
#include <benchmark/benchmark.h>

#include "macbeath/density.hpp"

using namespace macbeath;

static void BM_SweepSerial(benchmark::State& state) {
  const auto spec = density::default_sweep(3, static_cast<unsigned>(state.range(0)), 400);
  for (auto _ : state) benchmark::DoNotOptimize(density::sweep_serial(spec));
}
BENCHMARK(BM_SweepSerial)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
  const auto spec = density::default_sweep(3, static_cast<unsigned>(state.range(0)), 400);
  const density::SweepOptions opts{static_cast<int>(state.range(1)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(density::sweep(spec, opts));
}
BENCHMARK(BM_SweepParallel)->Args({7, 1})->Args({7, 4})->Args({13, 1})->Args({13, 4})->Unit(benchmark::kMillisecond);

static void BM_PatternSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(density::pattern_census_serial(3, 7, state.range(0)));
}
BENCHMARK(BM_PatternSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_PatternParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(density::pattern_census(3, 7, state.range(0), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_PatternParallel)->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
