#include "wittenlab/hurwitz.hpp"

#include "wittenlab/characters.hpp"

#include <benchmark/benchmark.h>

using namespace wittenlab;

static void BM_census(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    const Partition nu(std::vector<int>(static_cast<size_t>(d), 1));
    for (auto _ : state) {
        auto census = factorization_census(nu, r);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_census)->Args({4, 4})->Args({4, 6})->Args({5, 4});

static void BM_frobenius(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Partition nu(std::vector<int>(static_cast<size_t>(d), 1));
    const Partition mu{d};
    character_table(d);  // build outside the loop
    for (auto _ : state) {
        auto v = factorization_count_frobenius({nu, mu, d + 1, false});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_frobenius)->Arg(5)->Arg(7)->Arg(8);

static void BM_target_count(benchmark::State& state) {
    for (auto _ : state) {
        auto v = factorization_count_bruteforce({{1, 1, 1, 1}, {2, 1, 1}, 5, true});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_target_count);
