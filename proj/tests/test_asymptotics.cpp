#include "wittenlab/asymptotics.hpp"

#include "wittenlab/quadrature.hpp"
#include "wittenlab/starstar.hpp"

#include <doctest.h>

using namespace wittenlab;

namespace {

bool close_rel(const BigFloat& a, const BigFloat& b, double tol) {
    return (bf_abs(a - b) <= BigFloat(tol, a.precision()) * bf_abs(b)) ||
           (a.is_zero() && b.is_zero());
}

}  // namespace

TEST_CASE("asym_sum smallest case fixes the ordered-sum convention") {
    // only (p,q) = (1,1): e^{-2} * 1
    auto s = asym_sum(2, 0, 0, AsymForm::first, 128);
    auto e2 = bf_exp(BigFloat(-2L, 160));
    CHECK(close_rel(s, e2, 1e-35));
    CHECK_THROWS_AS(asym_sum(1, 0, 0, AsymForm::first, 128), std::invalid_argument);
    CHECK_THROWS_AS(asym_sum(1000, 0, 0, AsymForm::first, 32), std::invalid_argument);
}

TEST_CASE("asym_sum is exactly symmetric in (k,l)") {
    for (long n : {17L, 100L}) {
        auto a = asym_sum(n, 1, 3, AsymForm::first, 128);
        auto b = asym_sum(n, 3, 1, AsymForm::first, 128);
        CHECK(bf_abs(a - b).is_zero());
    }
}

TEST_CASE("first-form leading coefficients") {
    auto rep = asym_leading_check(0, 0, {100, 1000, 10000}, 128, 0.02);
    CHECK(rep.pass);
    CHECK(rep.target == doctest::Approx(1.0 / 16));
    auto rep12 = asym_leading_check(1, 2, {100, 1000, 10000}, 128, 0.02);
    CHECK(rep12.pass);
    CHECK(rep12.target == doctest::Approx(45.0 / 7680));
    // relative error shrinks along the schedule roughly like n^{-1}
    CHECK(rep.monotone);
}

TEST_CASE("second-form sub-leading coefficients") {
    auto rep = asym_subleading_check(0, {1000, 10000}, 128, 0.05);
    CHECK(rep.pass);
    CHECK(rep.target == doctest::Approx(-0.5));
    auto rep1 = asym_subleading_check(1, {1000, 10000}, 128, 0.05);
    CHECK(rep1.pass);
    CHECK(rep1.target == doctest::Approx(-0.75));
}

TEST_CASE("laplace transform pairs") {
    CHECK(laplace_check(1, Rational(1), 128));
    CHECK(laplace_check(0, Rational(1), 128));
    CHECK(laplace_check(3, Rational(1, 2), 128));
    // direct value checks from the closed forms
    const mpfr_prec_t wp = 160;
    BigFloat lhs = integrate_zero_inf(
        [&](const BigFloat& x) {
            return bf_pow(x, BigFloat(Rational(1, 2), wp)) /
                   bf_sqrt(BigFloat(2L, wp) * BigFloat::pi(wp)) *
                   bf_exp(-x / BigFloat(2L, wp));
        },
        128, BigFloat(1e-25, wp));
    CHECK(close_rel(lhs, BigFloat(1L, wp), 1e-20));  // (2*1-1)!! * 1^{3/2} = 1
}

TEST_CASE("join integral identity") {
    CHECK(join_integral_check(0, Rational(1), Rational(4), 128));
    CHECK(join_integral_check(2, Rational(1), Rational(2), 128));
    CHECK_THROWS_AS(join_integral_check(0, Rational(1), Rational(1), 128),
                    std::invalid_argument);
    // removable singularity at y_i = y_j: the displayed form converges to the
    // analytic value along an approach sequence
    const mpfr_prec_t wp = 160;
    const BigFloat y(2L, wp);
    auto displayed = [&](const BigFloat& yi, const BigFloat& yj) {
        BigFloat sum(wp);
        for (int m = 0; m <= 2; ++m)
            sum += bf_pow(yi, BigFloat(2 - m, wp) / BigFloat(2L, wp)) *
                   bf_pow(yj, BigFloat(m, wp) / BigFloat(2L, wp));
        return sum / ((bf_sqrt(yi) + bf_sqrt(yj)) *
                      bf_pow(BigFloat(2L, wp) * yi * yj, BigFloat(Rational(3, 2), wp)));
    };
    // limit value at yi = yj = y: 3y / (2 sqrt(y) (2 y^2)^{3/2})
    BigFloat limit = BigFloat(3L, wp) * bf_sqrt(y) /
                     (BigFloat(2L, wp) *
                      bf_pow(BigFloat(2L, wp) * y * y, BigFloat(Rational(3, 2), wp)));
    BigFloat prev_gap(1e9, wp);
    for (int m = 1; m <= 6; ++m) {
        BigFloat eps = bf_pow2(-4 * m, wp);
        BigFloat gap = bf_abs(displayed(y, y * (BigFloat(1L, wp) + eps)) - limit);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("quadrature verdicts are stable across precisions") {
    for (int k = 0; k <= 2; ++k) {
        CHECK(laplace_check(k, Rational(2), 128) == laplace_check(k, Rational(2), 256));
    }
    CHECK(join_integral_check(1, Rational(1), Rational(4), 128) ==
          join_integral_check(1, Rational(1), Rational(4), 256));
}

TEST_CASE("stirling stratum ratios") {
    auto r1 = stirling_stratum_check({1}, {0}, {64, 256, 1024}, 128, 1e-3);
    CHECK(r1.pass);
    auto r2 = stirling_stratum_check({1, 1}, {1, 0}, {64, 256, 1024}, 128, 1e-3);
    CHECK(r2.pass);
    auto r3 = stirling_stratum_check({2, 1}, {0, 0}, {64, 256, 1024}, 128, 1e-3);
    CHECK(r3.pass);
    CHECK(r3.rate_ok);  // measured rate ~ c/N
}

TEST_CASE("starstar residuals are pure roundoff") {
    auto& cache = global_correlator_cache();
    CHECK(join_case_coefficient(1, 0) == 1);
    CHECK(join_case_coefficient(2, 3) == 1);
    CHECK(join_case_coefficient(0, 5) == 1);

    auto r0 = starstar_numeric_check(
        0, {1, 0, 0, 0},
        {Rational(7, 5), Rational(13, 7), Rational(2), Rational(3, 11)}, 256, cache);
    CHECK(r0.pass);
    auto r1 = starstar_numeric_check(1, {1}, {Rational(1)}, 256, cache);
    CHECK(r1.pass);
    auto r2a = starstar_numeric_check(2, {4}, {Rational(1)}, 256, cache);
    CHECK(r2a.pass);
    // doubling precision shrinks the residual with the working precision
    auto r2b = starstar_numeric_check(2, {4}, {Rational(1)}, 512, cache);
    CHECK(r2b.pass);
    CHECK(r2b.residual <= r2a.residual * bf_pow2(-128, 256) + bf_pow2(-700, 256));
    CHECK_THROWS_AS(starstar_numeric_check(0, {1}, {Rational(1)}, 256, cache),
                    std::invalid_argument);
}
