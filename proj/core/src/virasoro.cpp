#include "wittenlab/virasoro.hpp"

#include <stdexcept>

namespace wittenlab {

VirasoroOperator VirasoroOperator::make(int n, FirstTermConvention conv) {
    if (n < -1) throw std::invalid_argument("VirasoroOperator: n >= -1 required");
    VirasoroOperator op;
    op.index = n;
    if (n <= 0)
        op.first_term_index = n + 1;  // the L_{-1}, L_0 cases fix this index
    else
        op.first_term_index = conv == FirstTermConvention::shifted_up ? n + 1 : n - 1;
    op.constant = n == 0 ? Rational(1, 16) : Rational(0);
    return op;
}

namespace {

void enumerate_multisets(int K, int D, int var, Monomial& m, long n, long ksum,
                         CorrelatorCache& cache, SparseSeries& F) {
    if (var > K) {
        if (n == 0) return;
        long num = ksum - n + 3;
        if (num % 3 != 0 || num < 0) return;
        int g = static_cast<int>(num / 3);
        std::vector<int> ks;
        mpz_class sym = 1;
        for (size_t v = 0; v < m.size(); ++v) {
            for (int t = 0; t < m[v]; ++t) ks.push_back(static_cast<int>(v));
            if (m[v] > 1) sym *= factorial(m[v]);
        }
        CorrelatorKey key(g, ks);
        if (!key.stable()) return;
        Rational plain = psi_correlator(key, cache);
        if (plain.is_zero()) return;
        F.add_term(m, plain * tilde_factor(key.exponents) / Rational(sym));
        return;
    }
    for (int cnt = 0; n + cnt <= D; ++cnt) {
        m[static_cast<size_t>(var)] = static_cast<uint8_t>(cnt);
        enumerate_multisets(K, D, var + 1, m, n + cnt, ksum + static_cast<long>(var) * cnt,
                            cache, F);
    }
    m[static_cast<size_t>(var)] = 0;
}

}  // namespace

SparseSeries build_free_energy(int K, int D, CorrelatorCache& cache) {
    if (K < 0 || D < 0) throw std::invalid_argument("build_free_energy: K, D >= 0");
    SparseSeries F(K, D);
    Monomial m(static_cast<size_t>(K) + 1, 0);
    enumerate_multisets(K, D, 0, m, 0, 0, cache, F);
    return F;
}

SparseSeries apply_virasoro(int n, const SparseSeries& s, FirstTermConvention conv) {
    if (n < -1) throw std::invalid_argument("apply_virasoro: n >= -1 required");
    const VirasoroOperator op = VirasoroOperator::make(n, conv);
    const int K = s.max_index();
    const int D = s.max_degree();
    const int outK = n >= 1 ? K - n : K;
    const int outD = n >= 1 ? D - 2 : D - 1;
    SparseSeries out(outK, outD);
    const Rational quarter(1, 4);

    for (const auto& [m, c] : s.terms()) {
        // -(1/2) d/dt_f
        const size_t f = static_cast<size_t>(op.first_term_index);
        if (f < m.size() && m[f] >= 1) {
            Monomial mm = m;
            --mm[f];
            out.add_term(mm, Rational(-static_cast<long>(m[f]), 2) * c);
        }
        // sum_k (k + 1/2) t_k d/dt_{k+n}, k >= 1 for n = -1, k >= 0 otherwise
        const int kmin = n == -1 ? 1 : 0;
        for (size_t j = 0; j < m.size(); ++j) {
            if (!m[j]) continue;
            const long k = static_cast<long>(j) - n;
            if (k < kmin) continue;
            Monomial mm = m;
            --mm[j];
            if (mm.size() <= static_cast<size_t>(k)) mm.resize(static_cast<size_t>(k) + 1, 0);
            ++mm[static_cast<size_t>(k)];
            out.add_term(mm, Rational(2 * k + 1, 2) * Rational(m[j]) * c);
        }
        if (n >= 1) {
            // (1/4) sum_{i=1}^{n} d^2/dt_{i-1} dt_{n-i}
            for (int i = 1; i <= n; ++i) {
                const size_t u = static_cast<size_t>(i - 1);
                const size_t v = static_cast<size_t>(n - i);
                if (u == v) {
                    if (u < m.size() && m[u] >= 2) {
                        Monomial mm = m;
                        mm[u] = static_cast<uint8_t>(mm[u] - 2);
                        out.add_term(mm, quarter * Rational(static_cast<long>(m[u]) *
                                                            (m[u] - 1)) * c);
                    }
                } else if (u < m.size() && v < m.size() && m[u] >= 1 && m[v] >= 1) {
                    Monomial mm = m;
                    --mm[u];
                    --mm[v];
                    out.add_term(mm, quarter * Rational(static_cast<long>(m[u]) * m[v]) * c);
                }
            }
        } else if (n == -1) {
            // +(1/4) t_0^2
            Monomial mm = m;
            if (mm.empty()) mm.resize(1, 0);
            mm[0] = static_cast<uint8_t>(mm[0] + 2);
            out.add_term(mm, quarter * c);
        }
        if (!op.constant.is_zero()) out.add_term(m, op.constant * c);
    }
    return out;
}

SparseSeries virasoro_residual(int n, int K, int D, CorrelatorCache& cache,
                               FirstTermConvention conv) {
    SparseSeries tau = series_exp(build_free_energy(K, D, cache));
    return apply_virasoro(n, tau, conv);
}

}  // namespace wittenlab
