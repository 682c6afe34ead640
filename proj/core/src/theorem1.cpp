#include "wittenlab/theorem1.hpp"

#include "wittenlab/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wittenlab {

Rational d_series_entry(int g, const Partition& nu, const Partition& e,
                        const HodgeTable& table, CorrelatorCache& cache) {
    if (nu.length() == 0) throw std::invalid_argument("d_series_entry: empty nu");
    std::vector<Rational> weights;
    for (int v : nu.parts()) weights.emplace_back(v);
    Rational pref = Rational(1) /
                    Rational(mpz_class(factorial(static_cast<unsigned long>(e.length())) *
                                       aut_order(nu)));
    Rational wp(1);
    for (int v : nu.parts()) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v),
                      static_cast<unsigned long>(v));
        wp *= Rational(pw, factorial(static_cast<unsigned long>(v)));
    }
    return pref * wp * linear_hodge_integral(g, weights, e.parts(), table, cache);
}

namespace {

std::vector<Partition> sub_multisets_of(const Partition& p) {
    std::vector<std::pair<int, int>> groups;
    for (int v : p.parts()) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.push_back({v, 1});
    }
    std::vector<Partition> out;
    std::vector<int> take(groups.size(), 0);
    for (;;) {
        std::vector<int> parts;
        for (size_t gi = 0; gi < groups.size(); ++gi)
            for (int t = 0; t < take[gi]; ++t) parts.push_back(groups[gi].first);
        out.emplace_back(std::move(parts));
        size_t gi = 0;
        while (gi < groups.size() && take[gi] == groups[gi].second) {
            take[gi] = 0;
            ++gi;
        }
        if (gi == groups.size()) break;
        ++take[gi];
    }
    return out;
}

std::vector<int> multiset_minus(const std::vector<int>& big, const std::vector<int>& small) {
    std::vector<int> out = big;
    for (int v : small) out.erase(std::find(out.begin(), out.end(), v));
    return out;
}

bool multiset_contains(const std::vector<int>& big, const std::vector<int>& small) {
    auto it = big.begin();
    for (int v : small) {
        it = std::find(it, big.end(), v);
        if (it == big.end()) return false;
        ++it;
    }
    return true;
}

}  // namespace

DSeries build_d_series(const Partition& nu, const Partition& e, int order_cap,
                       const HodgeTable& table, CorrelatorCache& cache) {
    DSeries out;
    // Coefficients needing a genus >= 2 component start at lambda order
    // (2*2-2+1) - (l(nu)-1) = 4 - l(nu): one g=2 part plus minimal-grade
    // (0,(w)) components for the rest.
    out.complete_upto = std::min(order_cap, 3 - nu.length());

    // candidates: (g, nu_c, e_c) with g <= 1; identical components absorb 1/m!
    struct Cand {
        int g;
        Partition nu;
        Partition e;
    };
    std::vector<Cand> cands;
    for (const auto& ns : sub_multisets_of(nu)) {
        if (ns.length() == 0) continue;
        for (const auto& es : sub_multisets_of(e)) {
            for (int g = 0; g <= 1; ++g) cands.push_back({g, ns, es});
        }
    }

    std::function<void(size_t, std::vector<int>, std::vector<int>, int, Rational)> rec =
        [&](size_t idx, std::vector<int> rem_nu, std::vector<int> rem_e, int grade,
            Rational acc) {
            if (rem_nu.empty() && rem_e.empty()) {
                if (grade <= out.complete_upto) out.coeff[grade] += acc;
                return;
            }
            if (idx >= cands.size()) return;
            rec(idx + 1, rem_nu, rem_e, grade, acc);
            const Cand& c = cands[idx];
            const int cg = 2 * c.g - 2 + c.nu.length();
            Rational term = acc;
            std::vector<int> rn = std::move(rem_nu), re = std::move(rem_e);
            int total = grade;
            for (int m = 1;; ++m) {
                if (!multiset_contains(rn, c.nu.parts()) ||
                    !multiset_contains(re, c.e.parts()))
                    break;
                rn = multiset_minus(rn, c.nu.parts());
                re = multiset_minus(re, c.e.parts());
                total += cg;
                // remaining parts can lower the grade by at most one each
                if (total - static_cast<int>(rn.size()) > out.complete_upto) break;
                Rational dv = d_series_entry(c.g, c.nu, c.e, table, cache);
                term = term * dv / Rational(m);
                if (term.is_zero()) break;
                rec(idx + 1, rn, re, total, term);
            }
        };
    rec(0, nu.parts(), e.parts(), 0, Rational(1));

    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
    return out;
}

Rational phi_coefficient(const Partition& mu, const Partition& nu, int r) {
    if (r < 0) return Rational(0);
    if ((r + mu.length() + nu.length()) % 2 != 0) return Rational(0);
    Rational h = factorization_count_frobenius({mu, nu, r, false});
    if (h.is_zero()) return h;
    Rational v = h / Rational(factorial(static_cast<unsigned long>(r)));
    return r % 2 ? -v : v;
}

Theorem1Report theorem1_check(const Partition& mu, const Partition& e, int chi_min,
                              const HodgeTable& table, CorrelatorCache& cache) {
    Theorem1Report report;
    const int d = mu.size();
    if (d < 1) throw std::invalid_argument("theorem1_check: |mu| >= 1");
    const auto nus = partitions_of(d);

    // coefficient completeness: every D series must be complete at the order
    const int chi_max = mu.size() + mu.length() - e.size() - 1;
    const int order_max_wanted = mu.length() - chi_min;

    std::map<Partition, DSeries> dseries;
    int complete_upto = order_max_wanted;
    for (const auto& nu : nus) {
        DSeries s = build_d_series(nu, e, order_max_wanted, table, cache);
        complete_upto = std::min(complete_upto, s.complete_upto);
        dseries.emplace(nu, std::move(s));
    }

    for (int chi = chi_max; chi >= chi_min; --chi) {
        const int order = mu.length() - chi;
        // lowest possible D grade is -l(nu) >= -d; below that everything is 0
        if (order < -d) continue;
        if (order > complete_upto) {
            report.skipped_chis.push_back(chi);
            continue;
        }
        Rational coeff(0);
        for (const auto& nu : nus) {
            const Rational znu(z_order(nu));
            for (const auto& [grade, dval] : dseries.at(nu).coeff) {
                const int r = order - grade;
                if (r < 0) continue;
                Rational phi = phi_coefficient(mu, nu, r);
                if (!phi.is_zero()) coeff += phi * znu * dval;
            }
        }
        report.checked.push_back({chi, order});
        if (!coeff.is_zero()) report.ok = false;
    }
    return report;
}

}  // namespace wittenlab
