#include "wittenlab/hodge.hpp"

#include "wittenlab/hurwitz.hpp"
#include "wittenlab/linsolve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wittenlab {

HodgeKey::HodgeKey(int g, std::vector<int> ks, int j)
    : genus(g), exponents(std::move(ks)), lambda_index(j) {
    if (g < 0 || j < 0 || j > g) throw std::invalid_argument("HodgeKey: need 0 <= j <= g");
    for (int k : exponents)
        if (k < 0) throw std::invalid_argument("HodgeKey: negative exponent");
    std::sort(exponents.begin(), exponents.end(), std::greater<int>());
}

bool HodgeKey::dimension_ok() const {
    long sum = std::accumulate(exponents.begin(), exponents.end(), 0L);
    return sum + lambda_index == 3L * genus - 3 + static_cast<long>(exponents.size());
}

std::string HodgeKey::to_string() const {
    std::ostringstream os;
    os << "g=" << genus << " j=" << lambda_index << " k=";
    if (exponents.empty()) os << "-";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ',';
        os << exponents[i];
    }
    return os.str();
}

void HodgeTable::set(const HodgeKey& key, const Rational& value) { map_[key] = value; }

bool HodgeTable::has(const HodgeKey& key) const { return map_.count(key) > 0; }

Rational HodgeTable::get(const HodgeKey& key) const {
    auto it = map_.find(key);
    if (it == map_.end())
        throw std::out_of_range("HodgeTable: no value for " + key.to_string() +
                                " (populated for j <= 1, g <= 1 only)");
    return it->second;
}

namespace {

// <lambda_j psi^{b}>_g through psi-dvv (j = 0) or the table (j >= 1),
// applying the dimension filter.
Rational lambda_correlator(int g, const std::vector<int>& exps, int j,
                           const HodgeTable& table, CorrelatorCache& cache) {
    HodgeKey key(g, exps, j);
    if (!key.dimension_ok()) return Rational(0);
    if (j == 0) return psi_correlator(CorrelatorKey(g, exps), cache);
    return table.get(key);
}

}  // namespace

Rational linear_hodge_integral(int g, const std::vector<Rational>& weights,
                               const std::vector<int>& epowers, const HodgeTable& table,
                               CorrelatorCache& cache, bool alternating) {
    const int n_nu = static_cast<int>(weights.size());
    const int n_e = static_cast<int>(epowers.size());
    const int n = n_nu + n_e;
    if (n_nu < 1) throw std::invalid_argument("linear_hodge_integral: need a weighted point");
    for (int e : epowers)
        if (e < 0) throw std::invalid_argument("linear_hodge_integral: e >= 0");

    if (g == 0 && n == 1) {
        // declared unstable convention 1/w^2
        return Rational(1) / (weights[0] * weights[0]);
    }
    if (g == 0 && n == 2) {
        if (n_nu == 2) return Rational(1) / (weights[0] + weights[1]);
        // weighted point against an e-point: sum_c C(e,c) w^{-1-c}
        Rational total(0);
        Rational wpow = Rational(1) / weights[0];
        for (int c = 0; c <= epowers[0]; ++c) {
            total += Rational(binomial(static_cast<unsigned long>(epowers[0]),
                                       static_cast<unsigned long>(c))) *
                     wpow;
            wpow /= weights[0];
        }
        return total;
    }
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("linear_hodge_integral: unstable input");

    const long dim = 3L * g - 3 + n;
    Rational total(0);
    std::vector<int> exps(static_cast<size_t>(n), 0);
    // recursive enumeration of exponent tuples (b at weighted points, c at
    // e-points with c_j <= e_j) of total degree dim - j
    std::function<void(int, long, Rational, int)> rec = [&](int pos, long rem, Rational coeff,
                                                            int j) {
        if (pos == n) {
            if (rem != 0) return;
            Rational corr = lambda_correlator(g, exps, j, table, cache);
            if (!corr.is_zero()) total += coeff * corr;
            return;
        }
        if (pos < n_nu) {
            Rational wpow(1);
            for (long b = 0; b <= rem; ++b) {
                exps[static_cast<size_t>(pos)] = static_cast<int>(b);
                rec(pos + 1, rem - b, coeff * wpow, j);
                wpow *= weights[static_cast<size_t>(pos)];
            }
        } else {
            const int e = epowers[static_cast<size_t>(pos - n_nu)];
            for (long c = 0; c <= std::min<long>(e, rem); ++c) {
                exps[static_cast<size_t>(pos)] = static_cast<int>(c);
                Rational bc(binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(c)));
                if (c % 2) bc = -bc;
                rec(pos + 1, rem - c, coeff * bc, j);
            }
        }
        exps[static_cast<size_t>(pos)] = 0;
    };
    for (int j = 0; j <= g; ++j) {
        if (dim - j < 0) break;
        Rational sign(alternating && (j % 2) ? -1 : 1);
        rec(0, dim - j, sign, j);
    }
    return total;
}

Rational hodge_rational_integral(int g, const std::vector<Rational>& weights,
                                 const HodgeTable& table, CorrelatorCache& cache,
                                 bool alternating) {
    return linear_hodge_integral(g, weights, {}, table, cache, alternating);
}

namespace {

Rational weight_prefactor(const Partition& mu) {
    // prod mu_i^{mu_i} / mu_i!
    Rational p(1);
    for (int m : mu.parts()) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(m));
        p *= Rational(pw, factorial(static_cast<unsigned long>(m)));
    }
    return p;
}

std::vector<Rational> weights_of(const Partition& mu) {
    std::vector<Rational> w;
    for (int m : mu.parts()) w.emplace_back(m);
    return w;
}

}  // namespace

Rational elsv_rhs(int g, const Partition& mu, const HodgeTable& table,
                  CorrelatorCache& cache) {
    const int r = single_hurwitz_branch_points(g, mu);
    if (r < 0) throw std::invalid_argument("elsv_rhs: r < 0");
    Rational pref = Rational(factorial(static_cast<unsigned long>(r)), aut_order(mu));
    return pref * weight_prefactor(mu) *
           hodge_rational_integral(g, weights_of(mu), table, cache);
}

ExtractionResult extract_hodge_table(int nmax, int dmax) {
    CorrelatorCache& cache = global_correlator_cache();
    ExtractionResult res;

    // unknowns: <lambda_1 psi^k>_1 multisets with sum k = n - 1, n <= nmax
    std::vector<std::vector<int>> unknowns;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<int> k(static_cast<size_t>(n), 0);
        std::function<void(int, int, int)> gen = [&](int pos, int maxv, int rem) {
            if (pos == n) {
                if (rem == 0) unknowns.push_back(k);
                return;
            }
            for (int v = std::min(maxv, rem); v >= 0; --v) {
                k[static_cast<size_t>(pos)] = v;
                gen(pos + 1, v, rem - v);
            }
        };
        gen(0, n - 1, n - 1);
    }
    auto unknown_index = [&unknowns](const std::vector<int>& k) {
        auto it = std::find(unknowns.begin(), unknowns.end(), k);
        if (it == unknowns.end()) throw std::logic_error("extract: unknown not enumerated");
        return static_cast<size_t>(it - unknowns.begin());
    };

    // one equation per mu with l(mu) <= nmax, |mu| <= dmax:
    //   pref * [psi-part - sum_b prod mu^b x_{b}] = H_{1,mu}
    HodgeTable empty;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int d = 1; d <= dmax; ++d) {
        for (const auto& mu : partitions_of_max_length(d, nmax)) {
            const int n = mu.length();
            const int r = single_hurwitz_branch_points(1, mu);
            Rational pref = Rational(factorial(static_cast<unsigned long>(r)), aut_order(mu)) *
                            weight_prefactor(mu);
            // psi-only part of the integral: lambda_0 expansion
            Rational psi_part(0);
            {
                std::vector<int> exps(static_cast<size_t>(n), 0);
                std::function<void(int, long, Rational)> rec = [&](int pos, long rem,
                                                                   Rational coeff) {
                    if (pos == n) {
                        if (rem) return;
                        Rational c = psi_correlator(CorrelatorKey(1, exps), cache);
                        if (!c.is_zero()) psi_part += coeff * c;
                        return;
                    }
                    Rational wpow(1);
                    for (long b = 0; b <= rem; ++b) {
                        exps[static_cast<size_t>(pos)] = static_cast<int>(b);
                        rec(pos + 1, rem - b, coeff * wpow);
                        wpow *= Rational(mu.part(pos));
                    }
                };
                rec(0, 3L * 1 - 3 + n, Rational(1));
            }
            std::vector<Rational> row(unknowns.size(), Rational(0));
            {
                std::vector<int> exps(static_cast<size_t>(n), 0);
                std::function<void(int, long, Rational)> rec = [&](int pos, long rem,
                                                                   Rational coeff) {
                    if (pos == n) {
                        if (rem) return;
                        std::vector<int> k = exps;
                        std::sort(k.begin(), k.end(), std::greater<int>());
                        row[unknown_index(k)] += pref * coeff;
                        return;
                    }
                    Rational wpow(1);
                    for (long b = 0; b <= rem; ++b) {
                        exps[static_cast<size_t>(pos)] = static_cast<int>(b);
                        rec(pos + 1, rem - b, coeff * wpow);
                        wpow *= Rational(mu.part(pos));
                    }
                };
                rec(0, static_cast<long>(n) - 1, Rational(1));
            }
            rhs.push_back(pref * psi_part - single_hurwitz(1, mu));
            rows.push_back(std::move(row));
        }
    }

    res.unknowns = static_cast<int>(unknowns.size());
    res.equations = static_cast<int>(rows.size());
    auto sol = exact_linear_solve(rows, rhs);
    res.consistent = sol.has_value();
    if (sol) {
        for (size_t i = 0; i < unknowns.size(); ++i)
            res.table.set(HodgeKey(1, unknowns[i], 1), (*sol)[i]);
    }
    return res;
}

Rational cutjoin_w(int g, const Partition& mu, const HodgeTable& table,
                   CorrelatorCache& cache) {
    if (g < 0 || mu.length() == 0) return Rational(0);
    Rational pref(1);
    for (int m : mu.parts()) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(m + 1));
        pref *= Rational(pw, factorial(static_cast<unsigned long>(m)));
    }
    return pref * hodge_rational_integral(g, weights_of(mu), table, cache);
}

namespace {

// labeled sub-multiset splits with multiplicities, as in the recursion terms
template <typename F>
void for_each_labeled_split(const Partition& rest, F&& f) {
    std::vector<std::pair<int, int>> groups;
    for (int v : rest.parts()) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.push_back({v, 1});
    }
    std::vector<int> take(groups.size(), 0);
    for (;;) {
        std::vector<int> a, b;
        long mult = 1;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            for (int t = 0; t < take[gi]; ++t) a.push_back(groups[gi].first);
            for (int t = take[gi]; t < groups[gi].second; ++t) b.push_back(groups[gi].first);
            mult *= binomial(static_cast<unsigned long>(groups[gi].second),
                             static_cast<unsigned long>(take[gi]))
                        .get_si();
        }
        f(Partition(std::move(a)), Partition(std::move(b)), mult);
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

Rational gamma_value(GammaKind kind, int g, const Partition& mu, int i, int jp,
                     const HodgeTable& table, CorrelatorCache& cache) {
    const int n = mu.length();
    auto check_pos = [n](int idx) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("gamma_value: bad position");
    };
    switch (kind) {
        case GammaKind::gamma_r:
            return Rational(1, 1) / Rational(aut_order(mu)) * weight_prefactor(mu) *
                   hodge_rational_integral(g, weights_of(mu), table, cache);
        case GammaKind::gamma_join: {
            check_pos(i);
            check_pos(jp);
            if (i == jp) throw std::invalid_argument("gamma_value: join needs i != j");
            std::vector<int> v = mu.parts();
            v[static_cast<size_t>(std::min(i, jp))] += v[static_cast<size_t>(std::max(i, jp))];
            v.erase(v.begin() + std::max(i, jp));
            Partition eta(std::move(v));
            return Rational(1) / Rational(aut_order(eta)) * weight_prefactor(eta) *
                   hodge_rational_integral(g, weights_of(eta), table, cache);
        }
        case GammaKind::gamma_cut1: {
            check_pos(i);
            const int p = jp;
            if (p < 1 || p >= mu.part(i)) throw std::invalid_argument("gamma_value: bad cut");
            if (g < 1) return Rational(0);
            Partition nu = mu.without(i).merged(Partition{p, mu.part(i) - p});
            return Rational(1) / Rational(aut_order(nu)) * weight_prefactor(nu) *
                   hodge_rational_integral(g - 1, weights_of(nu), table, cache);
        }
        case GammaKind::gamma_cut2: {
            check_pos(i);
            const int p = jp;
            if (p < 1 || p >= mu.part(i)) throw std::invalid_argument("gamma_value: bad cut");
            const int q = mu.part(i) - p;
            const Partition rest = mu.without(i);
            const Partition nu = rest.merged(Partition{p, q});
            Rational total(0);
            // sum over genus and multiset splittings of the displayed product,
            // p in nu1 and q in nu2, unstable vertices included
            for_each_labeled_split(rest, [&](const Partition& a, const Partition& b, long) {
                Partition nu1 = a.merged(Partition{p});
                Partition nu2 = b.merged(Partition{q});
                for (int g1 = 0; g1 <= g; ++g1) {
                    Rational i1 = hodge_rational_integral(g1, weights_of(nu1), table, cache);
                    if (i1.is_zero()) continue;
                    Rational i2 =
                        hodge_rational_integral(g - g1, weights_of(nu2), table, cache);
                    if (i2.is_zero()) continue;
                    total += weight_prefactor(nu) /
                             Rational(mpz_class(aut_order(nu1) * aut_order(nu2))) * i1 * i2;
                }
            });
            return total;
        }
    }
    throw std::logic_error("gamma_value: unreachable");
}

bool cutjoin_relation_check(int g, const Partition& mu, const HodgeTable& table,
                            CorrelatorCache& cache) {
    const int r = single_hurwitz_branch_points(g, mu);
    if (r < 0) throw std::invalid_argument("cutjoin_relation_check: r < 0");
    const auto& parts = mu.parts();
    const int n = mu.length();

    Rational lhs = Rational(r) * cutjoin_w(g, mu, table, cache);
    Rational rhs(0);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> v = parts;
            v[static_cast<size_t>(i)] += v[static_cast<size_t>(j)];
            v.erase(v.begin() + j);
            rhs += Rational(static_cast<long>(parts[static_cast<size_t>(i)]) *
                            parts[static_cast<size_t>(j)]) *
                   cutjoin_w(g, Partition(std::move(v)), table, cache);
        }
    }
    for (int i = 0; i < n; ++i) {
        const int mi = parts[static_cast<size_t>(i)];
        const Partition rest = mu.without(i);
        for (int p = 1; 2 * p <= mi; ++p) {
            const int q = mi - p;
            const Rational weight(p + q, p == q ? 2 : 1);
            if (g >= 1) rhs += weight * cutjoin_w(g - 1, rest.merged(Partition{p, q}), table, cache);
            for_each_labeled_split(rest, [&](const Partition& a, const Partition& b, long mult) {
                Partition nu1 = a.merged(Partition{p});
                Partition nu2 = b.merged(Partition{q});
                for (int g1 = 0; g1 <= g; ++g1) {
                    Rational w1 = cutjoin_w(g1, nu1, table, cache);
                    if (w1.is_zero()) continue;
                    Rational w2 = cutjoin_w(g - g1, nu2, table, cache);
                    if (w2.is_zero()) continue;
                    rhs += weight * Rational(mult) * w1 * w2;
                }
            });
        }
    }
    return lhs == rhs;
}

}  // namespace wittenlab
