#include "wittenlab/asymptotics.hpp"

#include "wittenlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace wittenlab {

namespace {

// pairwise reduction of a term vector
BigFloat pairwise_sum(std::vector<BigFloat>& terms, mpfr_prec_t prec) {
    if (terms.empty()) return BigFloat(prec);
    while (terms.size() > 1) {
        size_t half = (terms.size() + 1) / 2;
        for (size_t i = 0; i + half < terms.size(); ++i) terms[i] += terms[i + half];
        terms.resize(half);
    }
    return terms[0];
}

BigFloat dfact_bf(long m, mpfr_prec_t prec) { return BigFloat(Rational(double_factorial(m)), prec); }

}  // namespace

BigFloat asym_sum(long n, int k, int l, AsymForm form, mpfr_prec_t prec) {
    if (n < 2) throw std::invalid_argument("asym_sum: n >= 2");
    if (prec < 64 + static_cast<mpfr_prec_t>(std::ceil(std::log2(static_cast<double>(n) + 3))))
        throw std::invalid_argument("asym_sum: precision too low for requested n");
    const mpfr_prec_t wp = prec + 32;

    // ln p and lgamma(p+1) tables, shared by both exponent patterns
    std::vector<BigFloat> lnp, lgp;
    lnp.reserve(static_cast<size_t>(n));
    lgp.reserve(static_cast<size_t>(n));
    lnp.emplace_back(wp);  // unused p = 0 slot
    lgp.emplace_back(wp);
    for (long p = 1; p <= n - 1; ++p) {
        BigFloat bp(p, wp);
        lnp.push_back(bf_log(bp));
        lgp.push_back(bf_lngamma(bp + BigFloat(1L, wp)));
    }

    const BigFloat bn(n, wp);
    auto term_at = [&](long p) {
        const long q = n - p;
        const long qexp = form == AsymForm::first ? q + l + 1 : q - 1;
        // grouped so the floating sum is symmetric under (k,l),(p,q) swaps
        BigFloat num = BigFloat(p + k + 1, wp) * lnp[static_cast<size_t>(p)] +
                       BigFloat(qexp, wp) * lnp[static_cast<size_t>(q)];
        BigFloat den = lgp[static_cast<size_t>(p)] + lgp[static_cast<size_t>(q)];
        return bf_exp(num - den - bn);
    };
    // fold the p <-> q mirror pairs first so the addition tree is symmetric
    // under (k,l) -> (l,k) and the first form is exactly symmetric as summed
    std::vector<BigFloat> terms;
    terms.reserve(static_cast<size_t>(n) / 2 + 1);
    for (long p = 1; 2 * p <= n; ++p) {
        const long q = n - p;
        if (p == q)
            terms.push_back(term_at(p));
        else
            terms.push_back(term_at(p) + term_at(q));
    }
    return pairwise_sum(terms, wp);
}

AsymptoticReport asym_leading_check(int k, int l, const std::vector<long>& schedule,
                                    mpfr_prec_t prec, double tol) {
    if (schedule.size() < 3)
        throw std::invalid_argument("asym_leading_check: need >= 3 schedule points");
    AsymptoticReport rep;
    rep.formula = "first";
    rep.k = k;
    rep.l = l;
    rep.schedule = schedule;
    const mpfr_prec_t wp = prec + 32;
    // (1/2)(2k+1)!!(2l+1)!!/(2^{k+l+2}(k+l+2)!)
    Rational target = Rational(mpz_class(double_factorial(2L * k + 1) *
                                         double_factorial(2L * l + 1)),
                               mpz_class(2) * (mpz_class(1) << (k + l + 2)) *
                                   factorial(static_cast<unsigned long>(k + l + 2)));
    rep.target = target.to_double();
    const BigFloat tgt(target, wp);

    std::vector<BigFloat> errs;
    for (long n : schedule) {
        BigFloat s = asym_sum(n, k, l, AsymForm::first, prec);
        BigFloat ratio = s / bf_pow_si(BigFloat(n, wp), k + l + 2);
        rep.measured.push_back(ratio.to_double());
        errs.push_back(bf_abs(ratio - tgt));
    }
    rep.extrapolated = rep.measured.back();
    rep.monotone = true;
    for (size_t i = 1; i < errs.size(); ++i)
        if (!(errs[i] < errs[i - 1])) rep.monotone = false;
    BigFloat rel = errs.back() / bf_abs(tgt);
    rep.rel_error = rel.to_double();
    rep.pass = rep.monotone && rep.rel_error <= tol;
    return rep;
}

AsymptoticReport asym_subleading_check(int k, const std::vector<long>& schedule,
                                       mpfr_prec_t prec, double tol) {
    if (schedule.size() < 2)
        throw std::invalid_argument("asym_subleading_check: need >= 2 schedule points");
    AsymptoticReport rep;
    rep.formula = "second";
    rep.k = k;
    rep.schedule = schedule;
    const mpfr_prec_t wp = prec + 32;
    Rational target(-double_factorial(2L * k + 1),
                    mpz_class((mpz_class(1) << (k + 1)) * factorial(static_cast<unsigned long>(k))));
    rep.target = target.to_double();
    const BigFloat tgt(target, wp);
    const BigFloat sqrt2pi = bf_sqrt(BigFloat(2L, wp) * BigFloat::pi(wp));

    std::vector<BigFloat> diffs;
    for (long n : schedule) {
        BigFloat s = asym_sum(n, k, 0, AsymForm::second, prec);
        BigFloat bn(n, wp);
        BigFloat lead = bf_pow(bn, BigFloat(k, wp) + BigFloat(Rational(1, 2), wp)) / sqrt2pi;
        BigFloat d = (s - lead) / bf_pow_si(bn, k);
        diffs.push_back(d);
        rep.measured.push_back(d.to_double());
    }
    // Richardson in n^{-1/2}: d(n) = c + a n^{-1/2} + o(n^{-1/2})
    const size_t m = diffs.size();
    BigFloat n1(schedule[m - 2], wp), n2(schedule[m - 1], wp);
    BigFloat r1 = BigFloat(1L, wp) / bf_sqrt(n1), r2 = BigFloat(1L, wp) / bf_sqrt(n2);
    BigFloat extrap = diffs[m - 1] + (diffs[m - 1] - diffs[m - 2]) * r2 / (r1 - r2);
    rep.extrapolated = extrap.to_double();
    BigFloat rel = bf_abs(extrap - tgt) / bf_abs(tgt);
    rep.rel_error = rel.to_double();
    rep.pass = rep.rel_error <= tol;
    return rep;
}

bool laplace_check(int k, const Rational& s, mpfr_prec_t prec, double rel_tol) {
    if (k < 0 || s.sign() <= 0) throw std::invalid_argument("laplace_check: k >= 0, s > 0");
    const mpfr_prec_t wp = prec + 32;
    const BigFloat tol(rel_tol, wp);
    const BigFloat bs(s, wp);
    const BigFloat sqrt2pi = bf_sqrt(BigFloat(2L, wp) * BigFloat::pi(wp));
    const BigFloat half(Rational(1, 2), wp);
    const BigFloat inv2s = BigFloat(1L, wp) / (BigFloat(2L, wp) * bs);

    // half-integer form
    BigFloat lhs1 = integrate_zero_inf(
        [&](const BigFloat& x) {
            return bf_pow(x, BigFloat(k, wp) - half) / sqrt2pi * bf_exp(-x * inv2s);
        },
        prec, tol / BigFloat(64L, wp));
    BigFloat rhs1 = dfact_bf(2L * k - 1, wp) * bf_pow(bs, BigFloat(k, wp) + half);
    if (bf_abs(lhs1 - rhs1) > tol * bf_abs(rhs1)) return false;

    // integer form
    BigFloat lhs2 = integrate_zero_inf(
        [&](const BigFloat& x) { return bf_pow_si(x, k) * bf_exp(-x * inv2s); }, prec,
        tol / BigFloat(64L, wp));
    BigFloat rhs2 = BigFloat(Rational(factorial(static_cast<unsigned long>(k))), wp) *
                    bf_pow_si(BigFloat(2L, wp) * bs, k + 1);
    return bf_abs(lhs2 - rhs2) <= tol * bf_abs(rhs2);
}

bool join_integral_check(int k, const Rational& yi, const Rational& yj, mpfr_prec_t prec,
                         double rel_tol) {
    if (k < 0 || yi.sign() <= 0 || yj.sign() <= 0 || yi == yj)
        throw std::invalid_argument("join_integral_check: k >= 0, 0 < y_i != y_j");
    const mpfr_prec_t wp = prec + 32;
    const BigFloat tol(rel_tol, wp);
    const BigFloat byi(yi, wp), byj(yj, wp);
    const BigFloat sqrt2pi = bf_sqrt(BigFloat(2L, wp) * BigFloat::pi(wp));
    const BigFloat half(Rational(1, 2), wp);

    BigFloat lhs = integrate_zero_inf_2d(
        [&](const BigFloat& x, const BigFloat& y) {
            return bf_pow(x + y, BigFloat(k, wp) + half) / sqrt2pi *
                   bf_exp(-x * byi - y * byj);
        },
        prec, tol / BigFloat(64L, wp));

    // displayed closed form
    BigFloat sum(wp);
    for (int m = 0; m <= 2 * k + 2; ++m) {
        sum += bf_pow(byi, BigFloat(2 * k + 2 - m, wp) * half) *
               bf_pow(byj, BigFloat(m, wp) * half);
    }
    BigFloat rhs = sum * dfact_bf(2L * k + 1, wp) /
                   ((bf_sqrt(byi) + bf_sqrt(byj)) *
                    bf_pow(BigFloat(2L, wp) * byi * byj,
                           BigFloat(k, wp) + BigFloat(Rational(3, 2), wp)));

    // one-dimensional analytic reduction: Gamma(k+3/2) = (2k+1)!! sqrt(pi)/2^{k+1}
    BigFloat gamma_k32 = dfact_bf(2L * k + 1, wp) * bf_sqrt(BigFloat::pi(wp)) /
                         bf_pow_si(BigFloat(2L, wp), k + 1);
    BigFloat p32 = BigFloat(k, wp) + BigFloat(Rational(3, 2), wp);
    BigFloat oracle =
        gamma_k32 * (bf_pow(byi, -p32) - bf_pow(byj, -p32)) / (byj - byi) / sqrt2pi;
    // the two closed forms agree algebraically; require it numerically too
    if (bf_abs(rhs - oracle) > tol * bf_abs(oracle)) return false;
    return bf_abs(lhs - rhs) <= tol * bf_abs(rhs);
}

StirlingReport stirling_stratum_check(const std::vector<int>& xs, const std::vector<int>& ks,
                                      const std::vector<long>& n_schedule, mpfr_prec_t prec,
                                      double tol) {
    if (xs.size() != ks.size() || xs.empty())
        throw std::invalid_argument("stirling_stratum_check: |xs| == |ks| >= 1");
    StirlingReport rep;
    rep.schedule = n_schedule;
    const mpfr_prec_t wp = prec + 32;
    const BigFloat ln2pi = bf_log(BigFloat(2L, wp) * BigFloat::pi(wp));
    std::vector<BigFloat> devs;
    for (long N : n_schedule) {
        // log of prod mu^{mu+k}/mu! minus log of e^{|mu|} prod mu^{k-1/2}/sqrt(2pi)
        BigFloat le(wp);
        long musum = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            const long mu = static_cast<long>(xs[i]) * N;
            musum += mu;
            BigFloat bmu(mu, wp);
            BigFloat lmu = bf_log(bmu);
            le += BigFloat(mu + ks[i], wp) * lmu - bf_lngamma(bmu + BigFloat(1L, wp));
            le -= (BigFloat(ks[i], wp) - BigFloat(Rational(1, 2), wp)) * lmu;
            le += ln2pi / BigFloat(2L, wp);
        }
        le -= BigFloat(musum, wp);
        BigFloat dev = bf_exp(le) - BigFloat(1L, wp);
        devs.push_back(dev);
        rep.ratio_minus_1.push_back(dev.to_double());
    }
    // rate check: deviation should scale roughly like 1/N
    rep.rate_ok = true;
    for (size_t i = 1; i < devs.size(); ++i) {
        double q = std::abs(rep.ratio_minus_1[i - 1] / rep.ratio_minus_1[i]);
        double expect = static_cast<double>(n_schedule[i]) / n_schedule[i - 1];
        if (q < expect / 2 || q > expect * 2) rep.rate_ok = false;
    }
    rep.pass = rep.rate_ok && std::abs(rep.ratio_minus_1.back()) <= tol;
    return rep;
}

}  // namespace wittenlab
