// Serial vs OpenMP kernels on the same inputs. The serial toggle path
// is O(n log n) total work, the per-locker kernel is O(n sqrt n) but
// embarrassingly parallel; crossover depends on core count.

#include <benchmark/benchmark.h>

#include "locker/engine.hpp"
#include "locker/verifier.hpp"

using namespace locker;

static IndexSet random_subset(int n) {
    SplitMix64 rng(12345);
    return rng.subset(n);
}

static void BM_forward_serial(benchmark::State& state) {
    IndexSet u = random_subset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forward_divisor_parity(u));
}
BENCHMARK(BM_forward_serial)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_forward_parallel(benchmark::State& state) {
    IndexSet u = random_subset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forward_divisor_parity_parallel(u));
}
BENCHMARK(BM_forward_parallel)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_forward_reference(benchmark::State& state) {
    IndexSet u = random_subset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ref::forward_divisor_parity(u));
}
BENCHMARK(BM_forward_reference)->Arg(1000)->Arg(10000);

static void BM_torrence_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(torrence_open_state(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_torrence_serial)->Arg(10000)->Arg(100000);

static void BM_torrence_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(torrence_open_state_parallel(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_torrence_parallel)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
