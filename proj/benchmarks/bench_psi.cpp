#include "wittenlab/psi.hpp"

#include <benchmark/benchmark.h>

using namespace wittenlab;

static void BM_psi_cold(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CorrelatorCache cache;
        auto v = psi_correlator(CorrelatorKey(g, {3 * g - 2}), cache);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_psi_cold)->Arg(2)->Arg(3)->Arg(4);

static void BM_psi_warm(benchmark::State& state) {
    CorrelatorCache cache;
    psi_correlator(CorrelatorKey(3, {3, 2, 2, 2}), cache);
    for (auto _ : state) {
        auto v = psi_correlator(CorrelatorKey(3, {3, 2, 2, 2}), cache);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_psi_warm);

static void BM_psi_multipoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // genus-2 key (4+n, 1, ..., 1) with sum 3g-3+n
    std::vector<int> ks(static_cast<size_t>(n), 1);
    ks[0] = 3 * 2 - 3 + n - (n - 1);
    for (auto _ : state) {
        CorrelatorCache cache;
        auto v = psi_correlator(CorrelatorKey(2, ks), cache);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_psi_multipoint)->Arg(3)->Arg(5);
