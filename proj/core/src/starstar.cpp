#include "wittenlab/starstar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wittenlab {

long join_case_coefficient(int ki, int kj) {
    // 1/(sqrt(s_i)+sqrt(s_j)) = s_j^{-1/2} sum_m (-1)^m (s_i/s_j)^{m/2};
    // polynomial terms s_i^{1+t/2} s_j^{w+2-t/2}, t = 0..2w+2, w = ki+kj-1.
    // Matching s_i^{ki+1} s_j^{kj+1/2} forces t+m = 2 ki.
    const int w = ki + kj - 1;
    long coeff = 0;
    for (int t = 0; t <= 2 * w + 2; ++t) {
        const int m = 2 * ki - t;
        if (m < 0) continue;
        coeff += m % 2 ? -1 : 1;
    }
    return coeff;
}

namespace {

template <typename F>
void for_each_labeled_split(const std::vector<int>& rest, F&& f) {
    std::vector<std::pair<int, int>> groups;
    for (int v : rest) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.push_back({v, 1});
    }
    std::vector<int> take(groups.size(), 0);
    std::vector<int> x, y;
    for (;;) {
        x.clear();
        y.clear();
        long mult = 1;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            for (int t = 0; t < take[gi]; ++t) x.push_back(groups[gi].first);
            for (int t = take[gi]; t < groups[gi].second; ++t) y.push_back(groups[gi].first);
            mult *= binomial(static_cast<unsigned long>(groups[gi].second),
                             static_cast<unsigned long>(take[gi]))
                        .get_si();
        }
        f(x, y, mult);
        size_t gi = 0;
        while (gi < groups.size() && take[gi] == groups[gi].second) {
            take[gi] = 0;
            ++gi;
        }
        if (gi == groups.size()) break;
        ++take[gi];
    }
}

}  // namespace

StarStarResult starstar_numeric_check(int g, const std::vector<int>& ks,
                                      const std::vector<Rational>& xs, mpfr_prec_t prec,
                                      CorrelatorCache& cache, double rel_bound) {
    const int n = static_cast<int>(ks.size());
    if (n < 1 || xs.size() != ks.size())
        throw std::invalid_argument("starstar: need |ks| == |xs| >= 1");
    for (const auto& x : xs)
        if (x.sign() <= 0) throw std::invalid_argument("starstar: samples must be positive");
    long dim = std::accumulate(ks.begin(), ks.end(), 0L);
    if (dim != 3L * g - 3 + n)
        throw std::invalid_argument("starstar: dimension constraint violated");

    const mpfr_prec_t wp = prec + 32;
    const BigFloat sqrt2pi = bf_sqrt(BigFloat(2L, wp) * BigFloat::pi(wp));
    const BigFloat half(Rational(1, 2), wp);

    auto psi_bf = [&](int gg, std::vector<int> kk) {
        CorrelatorKey key(gg, std::move(kk));
        if (!key.dimension_ok() || !key.stable()) return BigFloat(wp);
        return BigFloat(psi_correlator(key, cache), wp);
    };
    auto dfact_bf = [&](long m) { return BigFloat(Rational(double_factorial(m)), wp); };
    auto xpow = [&](int i, const BigFloat& e) { return bf_pow(BigFloat(xs[static_cast<size_t>(i)], wp), e); };

    StarStarResult res{BigFloat(wp), BigFloat(wp), false};
    BigFloat total(wp);

    std::vector<int> all = ks;
    BigFloat p_all = psi_bf(g, all);

    for (int i = 0; i < n; ++i) {
        const int ki = ks[static_cast<size_t>(i)];
        std::vector<int> rest;
        for (int j = 0; j < n; ++j)
            if (j != i) rest.push_back(ks[static_cast<size_t>(j)]);

        BigFloat rho(1L, wp);
        {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                rho *= xpow(j, BigFloat(rest[static_cast<size_t>(jj)], wp) - half) / sqrt2pi;
                ++jj;
            }
        }
        const BigFloat xi_ki = xpow(i, BigFloat(ki, wp));
        const BigFloat common = xi_ki * rho;

        // (2k_i+1)!!/(2^{k_i+1} k_i!) term
        BigFloat a_term = common * dfact_bf(2L * ki + 1) /
                          (bf_pow_si(BigFloat(2L, wp), ki + 1) *
                           BigFloat(Rational(factorial(static_cast<unsigned long>(ki))), wp)) *
                          p_all;
        total += a_term;
        res.scale += bf_abs(a_term);

        // join terms through the isolated coefficient
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const int kj = ks[static_cast<size_t>(j)];
            const int w = ki + kj - 1;
            if (w < 0) continue;
            std::vector<int> joined;
            for (int l = 0; l < n; ++l)
                if (l != i && l != j) joined.push_back(ks[static_cast<size_t>(l)]);
            joined.push_back(w);
            BigFloat psi_w = psi_bf(g, joined);
            if (psi_w.is_zero()) continue;
            const long jcoef = join_case_coefficient(ki, kj);
            BigFloat j_term = BigFloat(jcoef, wp) * common * dfact_bf(2L * w + 1) /
                              (bf_pow_si(BigFloat(2L, wp), ki + 1) *
                               BigFloat(Rational(factorial(static_cast<unsigned long>(ki))), wp) *
                               dfact_bf(2L * kj - 1)) *
                              psi_w;
            total -= j_term;
            res.scale += bf_abs(j_term);
        }

        // cut terms, 1/4 normalization for ordered (a,b)
        for (int a = 0; a + 2 <= ki; ++a) {
            const int b = ki - 2 - a;
            BigFloat coef = dfact_bf(2L * a + 1) * dfact_bf(2L * b + 1) /
                            (bf_pow_si(BigFloat(2L, wp), a + b + 2) *
                             BigFloat(Rational(factorial(static_cast<unsigned long>(a + b + 2))), wp));
            BigFloat bracket(wp);
            if (g >= 1) {
                std::vector<int> child = rest;
                child.push_back(a);
                child.push_back(b);
                bracket += psi_bf(g - 1, child);
            }
            for_each_labeled_split(rest, [&](const std::vector<int>& x, const std::vector<int>& y,
                                             long mult) {
                std::vector<int> f1 = x;
                f1.push_back(a);
                std::vector<int> f2 = y;
                f2.push_back(b);
                for (int g1 = 0; g1 <= g; ++g1) {
                    BigFloat v1 = psi_bf(g1, f1);
                    if (v1.is_zero()) continue;
                    BigFloat v2 = psi_bf(g - g1, f2);
                    if (v2.is_zero()) continue;
                    bracket += BigFloat(mult, wp) * v1 * v2;
                }
            });
            BigFloat c_term = common * coef * bracket / BigFloat(4L, wp);
            total -= c_term;
            res.scale += bf_abs(c_term);
        }

        // degenerate pinch: the (0,2)-unstable Gamma_C1 limit, only at (g,n)=(1,1)
        if (g == 1 && n == 1) {
            BigFloat pinch = common * BigFloat(Rational(1, 32), wp);
            total -= pinch;
            res.scale += bf_abs(pinch);
        }
    }

    res.residual = bf_abs(total);
    res.pass = res.residual <= BigFloat(rel_bound, wp) * res.scale;
    return res;
}

}  // namespace wittenlab
