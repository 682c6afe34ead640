#pragma once

#include "wittenlab/bigfloat.hpp"
#include "wittenlab/partition.hpp"

#include <string>
#include <vector>

namespace wittenlab {

enum class AsymForm { first, second };

// e^{-n} sum_{p+q=n, p,q>=1} p^{p+k+1} q^{q+l+1} / (p! q!)   (first form)
// e^{-n} sum_{p+q=n, p,q>=1} p^{p+k+1} q^{q-1}   / (p! q!)   (second form)
// Log-domain evaluation with pairwise summation; the ordered sum runs over
// p = 1..n-1. Throws if the precision cannot absorb the error growth.
BigFloat asym_sum(long n, int k, int l, AsymForm form, mpfr_prec_t prec);

struct AsymptoticReport {
    std::string formula;
    int k = 0;
    int l = 0;
    std::vector<long> schedule;
    std::vector<double> measured;  // per schedule point
    double extrapolated = 0;
    double target = 0;
    double rel_error = 0;
    bool monotone = true;
    bool pass = false;
};

// First form: S(n)/n^{k+l+2} -> (1/2)(2k+1)!!(2l+1)!!/(2^{k+l+2}(k+l+2)!),
// monotone trend over the schedule, final point within tol.
AsymptoticReport asym_leading_check(int k, int l, const std::vector<long>& schedule,
                                    mpfr_prec_t prec, double tol);

// Second form: (S(n) - n^{k+1/2}/sqrt(2pi))/n^k -> -(2k+1)!!/(2^{k+1} k!),
// Richardson-differenced in n^{-1/2} across the last two schedule points.
AsymptoticReport asym_subleading_check(int k, const std::vector<long>& schedule,
                                       mpfr_prec_t prec, double tol);

// Laplace transform pair against closed forms to rel_tol:
//   int_0^inf x^{k-1/2}/sqrt(2pi) e^{-x/2s} dx = (2k-1)!! s^{k+1/2}
//   int_0^inf x^k e^{-x/2s} dx = k! (2s)^{k+1}
bool laplace_check(int k, const Rational& s, mpfr_prec_t prec, double rel_tol = 1e-9);

// 2D integral of (1/sqrt(2pi)) (x_i+x_j)^{k+1/2} e^{-x_i y_i - x_j y_j} against
// the closed form (1/(sqrt(y_i)+sqrt(y_j))) (2k+1)!!/(2 y_i y_j)^{k+3/2} *
// sum_m y_i^{(2k+2-m)/2} y_j^{m/2}, and against the one-dimensional analytic
// reduction Gamma(k+3/2)(y_i^{-k-3/2}-y_j^{-k-3/2})/((y_j-y_i) sqrt(2pi)).
bool join_integral_check(int k, const Rational& yi, const Rational& yj,
                         mpfr_prec_t prec, double rel_tol = 1e-8);

struct StirlingReport {
    std::vector<long> schedule;        // N values
    std::vector<double> ratio_minus_1; // measured deviation at each N
    bool rate_ok = false;              // deviation scales like c/N
    bool pass = false;                 // final ratio within tolerance of 1
};

// prod mu_i^{mu_i+k_i}/mu_i! -> e^{|mu|} prod mu_i^{k_i-1/2}/sqrt(2pi) with
// mu_i = N x_i; ratio -> 1 at rate O(1/N) along the schedule.
StirlingReport stirling_stratum_check(const std::vector<int>& xs, const std::vector<int>& ks,
                                      const std::vector<long>& n_schedule, mpfr_prec_t prec,
                                      double tol);

}  // namespace wittenlab
