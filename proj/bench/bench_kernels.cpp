// Serial reference loops vs the OpenMP versions of the two grid/restart kernels.

#include <benchmark/benchmark.h>

#include "tangle3/family.hpp"
#include "tangle3/roof_oracle.hpp"

using namespace tangle3;

static void BM_CurveSerial(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::characteristic_curve(2.0, points, 64));
}

static void BM_CurveParallel(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(characteristic_curve(2.0, points, 64));
}

static OracleOptions bench_options(int restarts) {
    OracleOptions options;
    options.members = 4;
    options.restarts = restarts;
    options.seed = 11;
    return options;
}

static void BM_OracleSerial(benchmark::State& state) {
    const auto r = rho(0.85, 0.075);
    const auto options = bench_options(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::min_avg_tangle(r, options).upper_bound);
}

static void BM_OracleParallel(benchmark::State& state) {
    const auto r = rho(0.85, 0.075);
    const auto options = bench_options(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_avg_tangle(r, options).upper_bound);
}

BENCHMARK(BM_CurveSerial)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CurveParallel)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
