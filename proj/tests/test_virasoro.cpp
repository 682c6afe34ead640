#include "wittenlab/virasoro.hpp"

#include <doctest.h>

using namespace wittenlab;

namespace {

CorrelatorCache& cache() {
    static CorrelatorCache c;
    return c;
}

// deterministic pseudo-random sparse series for operator-algebra checks
SparseSeries test_series(int K, int D, uint32_t seed) {
    SparseSeries s(K, D);
    uint32_t state = seed;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int t = 0; t < 25; ++t) {
        Monomial m(static_cast<size_t>(K) + 1, 0);
        int degree = static_cast<int>(next() % static_cast<uint32_t>(D + 1));
        for (int d = 0; d < degree; ++d) ++m[next() % static_cast<uint32_t>(K + 1)];
        long num = static_cast<long>(next() % 41) - 20;
        long den = 1 + static_cast<long>(next() % 7);
        s.add_term(m, Rational(num, den));
    }
    return s;
}

}  // namespace

TEST_CASE("free energy coefficients") {
    auto F = build_free_energy(3, 4, cache());
    CHECK(F.coefficient({3}) == Rational(1, 6));         // t0^3
    CHECK(F.coefficient({0, 1}) == Rational(1, 8));      // t1
    CHECK(F.coefficient({1, 0, 1}) == Rational(5, 8));   // t0 t2
    CHECK(F.coefficient({}) == Rational(0));
    // each monomial belongs to exactly one genus: 3g - 3 + n = sum k * m_k
    for (const auto& [m, c] : F.terms()) {
        long ksum = 0;
        long n = 0;
        for (size_t v = 0; v < m.size(); ++v) {
            ksum += static_cast<long>(v) * m[v];
            n += m[v];
        }
        CHECK((ksum - n + 3) % 3 == 0);
        CHECK(ksum - n + 3 >= 0);
    }
}

TEST_CASE("series exp and log round trip") {
    auto F = build_free_energy(4, 5, cache());
    auto tau = series_exp(F);
    CHECK(tau.coefficient({}) == Rational(1));
    CHECK(series_log(tau) == F);
}

TEST_CASE("operator structure") {
    auto opm1 = VirasoroOperator::make(-1, FirstTermConvention::shifted_up);
    CHECK(opm1.first_term_index == 0);
    auto op0 = VirasoroOperator::make(0, FirstTermConvention::shifted_up);
    CHECK(op0.first_term_index == 1);
    CHECK(op0.constant == Rational(1, 16));
    auto op3 = VirasoroOperator::make(3, FirstTermConvention::shifted_up);
    CHECK(op3.first_term_index == 4);
    auto op3p = VirasoroOperator::make(3, FirstTermConvention::printed_down);
    CHECK(op3p.first_term_index == 2);
    CHECK_THROWS_AS(VirasoroOperator::make(-2, FirstTermConvention::shifted_up),
                    std::invalid_argument);
}

TEST_CASE("low order residual coefficients") {
    auto tau = series_exp(build_free_energy(4, 5, cache()));
    auto lm1 = apply_virasoro(-1, tau);
    CHECK(lm1.coefficient({2}) == Rational(0));  // t0^2 coefficient
    auto l0 = apply_virasoro(0, tau);
    CHECK(l0.coefficient({}) == Rational(0));
    auto l1 = apply_virasoro(1, tau);
    CHECK(l1.coefficient({}) == Rational(0));
}

TEST_CASE("residuals vanish identically under the shifted-up convention") {
    for (int n = -1; n <= 2; ++n) {
        auto r = virasoro_residual(n, 5, 5, cache());
        CHECK_MESSAGE(r.is_zero(), "L_", n, " residual has ", r.term_count(), " terms");
    }
    // the printed t~_{n-1} variant does not annihilate tau
    auto alt = virasoro_residual(2, 5, 5, cache(), FirstTermConvention::printed_down);
    CHECK(!alt.is_zero());
}

TEST_CASE("commutators on a generic series") {
    // [L_m, L_n] = (m - n) L_{m+n} on the doubly reliable window
    auto check_pair = [&](int m, int n, const SparseSeries& s) {
        auto ab = apply_virasoro(m, apply_virasoro(n, s));
        auto ba = apply_virasoro(n, apply_virasoro(m, s));
        auto sum = apply_virasoro(m + n, s);
        sum.scale(Rational(m - n));
        auto win = ab - ba;  // clipped to the common window
        auto rhs = sum.clipped(win.max_index(), win.max_degree());
        CHECK(win == rhs);
    };
    auto s = test_series(7, 6, 12345u);
    check_pair(1, -1, s);
    check_pair(2, 0, s);
    auto tau = series_exp(build_free_energy(6, 6, cache()));
    check_pair(1, -1, tau);
    check_pair(2, 0, tau);
}

TEST_CASE("window clipping") {
    auto tau = series_exp(build_free_energy(5, 5, cache()));
    auto r = apply_virasoro(2, tau);
    CHECK(r.max_index() == 3);
    CHECK(r.max_degree() == 3);
    for (const auto& [m, c] : r.terms()) {
        CHECK(monomial_degree(m) <= 3);
        CHECK(monomial_max_index(m) <= 3);
    }
}
