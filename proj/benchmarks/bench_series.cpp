#include "wittenlab/virasoro.hpp"

#include <benchmark/benchmark.h>

using namespace wittenlab;

static void BM_free_energy(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    const int D = static_cast<int>(state.range(1));
    CorrelatorCache cache;
    build_free_energy(K, D, cache);  // warm the correlator memo
    for (auto _ : state) {
        auto F = build_free_energy(K, D, cache);
        benchmark::DoNotOptimize(F);
    }
}
BENCHMARK(BM_free_energy)->Args({5, 5})->Args({7, 6});

static void BM_series_exp(benchmark::State& state) {
    CorrelatorCache cache;
    auto F = build_free_energy(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                               cache);
    for (auto _ : state) {
        auto tau = series_exp(F);
        benchmark::DoNotOptimize(tau);
    }
}
BENCHMARK(BM_series_exp)->Args({5, 5})->Args({7, 6});

static void BM_apply_virasoro(benchmark::State& state) {
    CorrelatorCache cache;
    auto tau = series_exp(build_free_energy(7, 6, cache));
    for (auto _ : state) {
        auto r = apply_virasoro(static_cast<int>(state.range(0)), tau);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_apply_virasoro)->Arg(-1)->Arg(2)->Arg(4);
