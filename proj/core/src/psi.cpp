#include "wittenlab/psi.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wittenlab {

CorrelatorKey::CorrelatorKey(int g, std::vector<int> ks) : genus(g), exponents(std::move(ks)) {
    if (g < 0) throw std::invalid_argument("CorrelatorKey: negative genus");
    for (int k : exponents)
        if (k < 0) throw std::invalid_argument("CorrelatorKey: negative exponent");
    std::sort(exponents.begin(), exponents.end(), std::greater<int>());
}

long CorrelatorKey::exponent_sum() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

std::string CorrelatorKey::to_string() const {
    std::ostringstream os;
    os << "g=" << genus << " k=";
    if (exponents.empty()) os << "-";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ',';
        os << exponents[i];
    }
    return os.str();
}

size_t CorrelatorKeyHash::operator()(const CorrelatorKey& k) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<size_t>(k.genus));
    for (int e : k.exponents) mix(static_cast<size_t>(e) + 0x9e3779b9u);
    return h;
}

bool CorrelatorCache::lookup(const CorrelatorKey& key, Rational& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void CorrelatorCache::store(const CorrelatorKey& key, const Rational& value) {
    std::unique_lock lock(mu_);
    map_.emplace(key, value);
}

size_t CorrelatorCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

std::vector<std::pair<CorrelatorKey, Rational>> CorrelatorCache::snapshot_sorted() const {
    std::shared_lock lock(mu_);
    std::vector<std::pair<CorrelatorKey, Rational>> v(map_.begin(), map_.end());
    lock.unlock();
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.genus != b.first.genus) return a.first.genus < b.first.genus;
        return a.first.exponents < b.first.exponents;
    });
    return v;
}

void CorrelatorCache::clear() {
    std::unique_lock lock(mu_);
    map_.clear();
}

Rational tilde_factor(const std::vector<int>& exponents) {
    mpz_class f = 1;
    for (int k : exponents) f *= double_factorial(2L * k + 1);
    return Rational(f);
}

namespace {

// Enumerates ordered splits (X, Y) of a sorted multiset into two labeled
// index subsets, one call per sub-multiset with the number of index subsets
// realizing it, mult = prod_v C(m_v, x_v).
template <typename F>
void for_each_split(const std::vector<int>& rest, F&& f) {
    // group into (value, multiplicity)
    std::vector<std::pair<int, int>> groups;
    for (int v : rest) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.push_back({v, 1});
    }
    std::vector<int> take(groups.size(), 0);
    std::vector<int> X, Y;
    for (;;) {
        X.clear();
        Y.clear();
        long mult = 1;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            for (int t = 0; t < take[gi]; ++t) X.push_back(groups[gi].first);
            for (int t = take[gi]; t < groups[gi].second; ++t) Y.push_back(groups[gi].first);
            mult *= binomial(static_cast<unsigned long>(groups[gi].second),
                             static_cast<unsigned long>(take[gi]))
                        .get_si();
        }
        f(X, Y, mult);
        size_t gi = 0;
        while (gi < groups.size() && take[gi] == groups[gi].second) {
            take[gi] = 0;
            ++gi;
        }
        if (gi == groups.size()) break;
        ++take[gi];
    }
}

Rational psi_plain_rec(const CorrelatorKey& key, CorrelatorCache& cache);

// tilde-normalized value <prod sigma~_{k}>_g for a dimension-consistent key;
// returns 0 for unstable keys.
Rational psi_tilde_rec(int g, std::vector<int> ks, CorrelatorCache& cache) {
    CorrelatorKey k(g, std::move(ks));
    if (!k.stable()) return Rational(0);
    Rational plain = psi_plain_rec(k, cache);
    if (plain.is_zero()) return plain;
    return plain * tilde_factor(k.exponents);
}

Rational psi_plain_rec(const CorrelatorKey& key, CorrelatorCache& cache) {
    if (key.n() == 0 || !key.dimension_ok() || !key.stable()) return Rational(0);
    if (key.genus == 0 && key.n() == 3) return Rational(1);  // <tau_0^3>_0
    if (key.genus == 1 && key.n() == 1) return Rational(1, 24);  // <tau_1>_1

    Rational memo;
    if (cache.lookup(key, memo)) return memo;

    // Recurse on the largest exponent. A stable non-base key passing the
    // dimension constraint always has exponents[0] >= 1.
    const int nhat = key.exponents[0];
    const std::vector<int> rest(key.exponents.begin() + 1, key.exponents.end());
    const int g = key.genus;

    Rational tilde_total(0);
    const Rational half(1, 2);

    // join-type term: sum over remaining insertions
    for (size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> child = rest;
        child[j] = nhat + rest[j] - 1;
        tilde_total += Rational(2L * rest[j] + 1) * psi_tilde_rec(g, std::move(child), cache);
    }

    // cut terms: a + b = nhat - 2
    for (int a = 0; a + 2 <= nhat; ++a) {
        const int b = nhat - 2 - a;
        if (g >= 1) {
            std::vector<int> child = rest;
            child.push_back(a);
            child.push_back(b);
            tilde_total += half * psi_tilde_rec(g - 1, std::move(child), cache);
        }
        // splitting term over ordered (X, Y) and g1 + g2 = g; g1 is fixed by
        // the dimension constraint of the first factor.
        for_each_split(rest, [&](const std::vector<int>& X, const std::vector<int>& Y,
                                 long mult) {
            long sumX = std::accumulate(X.begin(), X.end(), 0L);
            long num = a + sumX - static_cast<long>(X.size()) + 2;
            if (num % 3 != 0) return;
            long g1 = num / 3;
            if (g1 < 0 || g1 > g) return;
            long g2 = g - g1;
            // stability of both factors, else the product vanishes
            if (2 * g1 - 2 + 1 + static_cast<long>(X.size()) <= 0) return;
            if (2 * g2 - 2 + 1 + static_cast<long>(Y.size()) <= 0) return;
            std::vector<int> f1 = X;
            f1.push_back(a);
            std::vector<int> f2 = Y;
            f2.push_back(b);
            Rational v1 = psi_tilde_rec(static_cast<int>(g1), std::move(f1), cache);
            if (v1.is_zero()) return;
            Rational v2 = psi_tilde_rec(static_cast<int>(g2), std::move(f2), cache);
            if (v2.is_zero()) return;
            tilde_total += half * Rational(mult) * v1 * v2;
        });
    }

    Rational plain = tilde_total / tilde_factor(key.exponents);
    cache.store(key, plain);
    return plain;
}

}  // namespace

Rational psi_correlator(const CorrelatorKey& key, CorrelatorCache& cache) {
    return psi_plain_rec(key, cache);
}

CorrelatorCache& global_correlator_cache() {
    static CorrelatorCache cache;
    return cache;
}

Rational psi_correlator(const CorrelatorKey& key) {
    return psi_plain_rec(key, global_correlator_cache());
}

Rational genus0_closed_form(const std::vector<int>& exponents) {
    const long n = static_cast<long>(exponents.size());
    long sum = std::accumulate(exponents.begin(), exponents.end(), 0L);
    if (n < 3 || sum != n - 3)
        throw std::invalid_argument("genus0_closed_form: sum k_i must equal n - 3, n >= 3");
    mpz_class den = 1;
    for (int k : exponents) den *= factorial(static_cast<unsigned long>(k));
    return Rational(factorial(static_cast<unsigned long>(n - 3)), den);
}

Rational one_point_closed_form(int g) {
    if (g < 1) throw std::invalid_argument("one_point_closed_form: g >= 1 required");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(g));
    return Rational(mpz_class(1), p * factorial(static_cast<unsigned long>(g)));
}

bool sharp_vs_star_check(const CorrelatorKey& key, CorrelatorCache& cache) {
    if (!key.dimension_ok() || !key.stable()) return false;
    // Base keys carry the content of the two operator constants; both
    // relations reduce to base data there.
    if (key.genus == 0 && key.n() == 3) return true;
    if (key.genus == 1 && key.n() == 1 && key.exponents[0] == 1) return true;

    const int nhat = key.exponents[0];
    if (nhat < 1) return false;
    const std::vector<int> rest(key.exponents.begin() + 1, key.exponents.end());
    const int g = key.genus;
    const Rational half(1, 2);

    // scale factor between the two normalizations: prod_{l != i} (2k_l + 1)
    Rational scale(1);
    for (int k : rest) scale *= Rational(2L * k + 1);

    auto tilde_of = [&cache](int gg, std::vector<int> ks) {
        return psi_tilde_rec(gg, std::move(ks), cache);
    };
    auto plain_of = [&cache](int gg, std::vector<int> ks) {
        CorrelatorKey k(gg, std::move(ks));
        if (!k.dimension_ok() || !k.stable()) return Rational(0);
        return psi_plain_rec(k, cache);
    };
    auto spectator = [](const std::vector<int>& ks) {
        mpz_class f = 1;
        for (int k : ks) f *= double_factorial(2L * k - 1);
        return Rational(f);
    };

    // star left side (tilde), sharp left side (plain with !!-weights)
    Rational star_lhs = tilde_of(g, key.exponents);
    Rational sharp_lhs = Rational(double_factorial(2L * nhat + 1)) * spectator(rest) *
                         psi_plain_rec(key, cache);
    if (sharp_lhs * scale != star_lhs) return false;

    Rational star_rhs(0), sharp_rhs(0);
    bool terms_ok = true;

    for (size_t j = 0; j < rest.size(); ++j) {
        const int kj = rest[j];
        const int w = nhat + kj - 1;
        std::vector<int> others = rest;
        others.erase(others.begin() + j);
        std::vector<int> child = others;
        child.push_back(w);
        Rational star_term = Rational(2L * kj + 1) * tilde_of(g, child);
        Rational sharp_term =
            Rational(double_factorial(2L * w + 1)) * spectator(others) * plain_of(g, child);
        if (sharp_term * scale != star_term) return false;
        star_rhs += star_term;
        sharp_rhs += sharp_term;
    }

    for (int a = 0; a + 2 <= nhat; ++a) {
        const int b = nhat - 2 - a;
        const Rational dd_ab =
            Rational(mpz_class(double_factorial(2L * a + 1) * double_factorial(2L * b + 1)));
        if (g >= 1) {
            std::vector<int> child = rest;
            child.push_back(a);
            child.push_back(b);
            Rational star_term = half * tilde_of(g - 1, child);
            Rational sharp_term = half * dd_ab * spectator(rest) * plain_of(g - 1, child);
            if (sharp_term * scale != star_term) return false;
            star_rhs += star_term;
            sharp_rhs += sharp_term;
        }
        for_each_split(rest, [&](const std::vector<int>& X, const std::vector<int>& Y,
                                 long mult) {
            std::vector<int> f1 = X;
            f1.push_back(a);
            std::vector<int> f2 = Y;
            f2.push_back(b);
            for (int g1 = 0; g1 <= g; ++g1) {
                int g2 = g - g1;
                Rational t1 = tilde_of(g1, f1);
                if (t1.is_zero()) continue;
                Rational t2 = tilde_of(g2, f2);
                if (t2.is_zero()) continue;
                Rational star_term = half * Rational(mult) * t1 * t2;
                Rational sharp_term = half * Rational(mult) * dd_ab * spectator(X) *
                                      spectator(Y) * plain_of(g1, f1) * plain_of(g2, f2);
                star_rhs += star_term;
                sharp_rhs += sharp_term;
                if (sharp_term * scale != star_term) terms_ok = false;
            }
        });
    }

    return terms_ok && star_lhs == star_rhs && sharp_lhs == sharp_rhs;
}

}  // namespace wittenlab
