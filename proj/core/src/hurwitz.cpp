#include "wittenlab/hurwitz.hpp"

#include "wittenlab/characters.hpp"
#include "wittenlab/permutations.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wittenlab {

std::string HurwitzKey::to_string() const {
    std::ostringstream os;
    os << "nu=(" << nu.to_string() << ") mu=(" << mu.to_string() << ") r=" << r
       << (connected ? " connected" : " disconnected");
    return os.str();
}

namespace {

// DFS over transposition tuples with an undoable union-find, an incrementally
// maintained product permutation, and incremental cycle-length counts so the
// leaves stay allocation free.
class TupleDfs {
public:
    TupleDfs(const Partition& nu, int r)
        : d_(nu.size()), r_(r), taus_(transpositions(d_)), sigma_(perm_of_type(nu, d_)) {
        cur_ = sigma_;
        inv_.resize(static_cast<size_t>(d_));
        for (int x = 0; x < d_; ++x) inv_[cur_[static_cast<size_t>(x)]] = static_cast<uint8_t>(x);
        parent_.resize(static_cast<size_t>(d_));
        rank_.assign(static_cast<size_t>(d_), 0);
        std::iota(parent_.begin(), parent_.end(), 0);
        comps_ = d_;
        for (int x = 0; x < d_; ++x) unite(x, sigma_[static_cast<size_t>(x)]);
        types_ = partitions_of(d_);
        counts_all_.assign(types_.size(), 0);
        counts_trans_.assign(types_.size(), 0);
        cnt_.fill(0);
        for (int len : nu.parts()) ++cnt_[static_cast<size_t>(len)];
        cycle_count_ = nu.length();
        type_keys_.reserve(types_.size());
        for (const auto& t : types_) type_keys_.push_back(pack_type(t));
        undo_.reserve(static_cast<size_t>(r) + 1);
        splits_.reserve(static_cast<size_t>(r) + 1);
    }

    // full census at level `first_lo <= tau_1 < first_hi` (for thread splits)
    void run_census(int first_lo, int first_hi) {
        if (r_ == 0) {
            if (first_lo == 0) record();
            return;
        }
        for (int t = first_lo; t < first_hi; ++t) {
            step(t);
            census_rec(r_ - 1);
            unstep(t);
        }
    }

    // pruned count toward a fixed target type
    void run_target(const Partition& target, int first_lo, int first_hi) {
        target_len_ = target.length();
        target_key_ = pack_type(target);
        if (r_ == 0) {
            if (first_lo == 0 && packed_type() == target_key_) record();
            return;
        }
        for (int t = first_lo; t < first_hi; ++t) {
            step(t);
            if (reachable(r_ - 1)) target_rec(r_ - 1);
            unstep(t);
        }
    }

    int tau_count() const { return static_cast<int>(taus_.size()); }

    void add_into(FactorizationCensus& census) const {
        for (size_t i = 0; i < types_.size(); ++i) {
            if (counts_all_[i]) census.all[types_[i]] += counts_all_[i];
            if (counts_trans_[i]) census.transitive[types_[i]] += counts_trans_[i];
        }
    }

private:
    // cycle-length counts packed four bits per length
    uint64_t pack_type(const Partition& p) const {
        uint64_t key = 0;
        for (int len : p.parts()) key += uint64_t(1) << (4 * (len - 1));
        return key;
    }
    uint64_t packed_type() const {
        uint64_t key = 0;
        for (int len = 1; len <= d_; ++len)
            key += uint64_t(cnt_[static_cast<size_t>(len)]) << (4 * (len - 1));
        return key;
    }

    void census_rec(int rem) {
        if (rem == 0) {
            record();
            return;
        }
        for (int t = 0; t < static_cast<int>(taus_.size()); ++t) {
            step(t);
            census_rec(rem - 1);
            unstep(t);
        }
    }

    void target_rec(int rem) {
        if (rem == 0) {
            if (packed_type() == target_key_) record();
            return;
        }
        for (int t = 0; t < static_cast<int>(taus_.size()); ++t) {
            step(t);
            if (reachable(rem - 1)) target_rec(rem - 1);
            unstep(t);
        }
    }

    bool reachable(int rem) const {
        int gap = std::abs(cycle_count_ - target_len_);
        return gap <= rem && (rem - gap) % 2 == 0;
    }

    void record() {
        const uint64_t key = packed_type();
        for (size_t i = 0; i < type_keys_.size(); ++i) {
            if (type_keys_[i] == key) {
                ++counts_all_[i];
                if (comps_ == 1) ++counts_trans_[i];
                return;
            }
        }
    }

    // apply tau on the left of cur (involution, so unstep = replay)
    void apply_swap(int t) {
        const auto [a, b] = taus_[static_cast<size_t>(t)];
        const uint8_t xa = inv_[a], xb = inv_[b];
        std::swap(cur_[xa], cur_[xb]);
        inv_[a] = xb;
        inv_[b] = xa;
    }

    void step(int t) {
        const auto [a, b] = taus_[static_cast<size_t>(t)];
        // walk a's cycle: length la, and the position of b when it splits
        int la = 1, posb = 0, i = 1;
        for (uint8_t x = cur_[a]; x != a; x = cur_[x], ++i) {
            if (x == b) posb = i;
            ++la;
        }
        if (posb) {
            --cnt_[static_cast<size_t>(la)];
            ++cnt_[static_cast<size_t>(posb)];
            ++cnt_[static_cast<size_t>(la - posb)];
            ++cycle_count_;
            splits_.push_back({la, posb});
        } else {
            int lb = 1;
            for (uint8_t x = cur_[b]; x != b; x = cur_[x]) ++lb;
            --cnt_[static_cast<size_t>(la)];
            --cnt_[static_cast<size_t>(lb)];
            ++cnt_[static_cast<size_t>(la + lb)];
            --cycle_count_;
            splits_.push_back({la, -lb});
        }
        apply_swap(t);
        undo_.push_back(unite(a, b));
    }

    void unstep(int t) {
        auto u = undo_.back();
        undo_.pop_back();
        if (u.first >= 0) {
            parent_[static_cast<size_t>(u.first)] = u.first;
            rank_[static_cast<size_t>(u.first)] = static_cast<uint8_t>(u.second);
            ++comps_;
        }
        apply_swap(t);
        auto [la, s] = splits_.back();
        splits_.pop_back();
        if (s > 0) {
            ++cnt_[static_cast<size_t>(la)];
            --cnt_[static_cast<size_t>(s)];
            --cnt_[static_cast<size_t>(la - s)];
            --cycle_count_;
        } else {
            ++cnt_[static_cast<size_t>(la)];
            ++cnt_[static_cast<size_t>(-s)];
            --cnt_[static_cast<size_t>(la - s)];
            ++cycle_count_;
        }
    }

    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
        return x;
    }

    // returns (child_root, old_rank_of_parent) or (-1, 0) if already joined
    std::pair<int, int> unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return {-1, 0};
        if (rank_[static_cast<size_t>(ra)] > rank_[static_cast<size_t>(rb)]) std::swap(ra, rb);
        int old_rank = rank_[static_cast<size_t>(rb)];
        parent_[static_cast<size_t>(ra)] = rb;
        if (rank_[static_cast<size_t>(ra)] == rank_[static_cast<size_t>(rb)])
            ++rank_[static_cast<size_t>(rb)];
        --comps_;
        return {ra, old_rank};
    }

    int d_;
    int r_;
    std::vector<std::pair<uint8_t, uint8_t>> taus_;
    Perm sigma_, cur_, inv_;
    std::vector<int> parent_;
    std::vector<uint8_t> rank_;
    std::vector<std::pair<int, int>> undo_;
    std::vector<std::pair<int, int>> splits_;  // (la, posb) or (la, -lb)
    std::array<int, 10> cnt_{};
    int comps_;
    int cycle_count_ = 0;
    int target_len_ = 0;
    uint64_t target_key_ = 0;
    std::vector<Partition> types_;
    std::vector<uint64_t> type_keys_;
    std::vector<unsigned long> counts_all_;
    std::vector<unsigned long> counts_trans_;
};

void check_brute_budget(int d, int r) {
    if (d > kBruteForceMaxDegree || r > kBruteForceMaxR)
        throw std::invalid_argument("brute force budget exceeded (d <= 5, r <= 8)");
}

FactorizationCensus census_threaded(const Partition& nu, int r, int threads) {
    const int d = nu.size();
    FactorizationCensus census;
    if (r == 0 || threads <= 1 || d < 2) {
        TupleDfs dfs(nu, r);
        dfs.run_census(0, r == 0 ? 1 : dfs.tau_count());
        dfs.add_into(census);
        return census;
    }
    const int ntau = static_cast<int>(transpositions(d).size());
    const int nthreads = std::min(threads, ntau);
    std::vector<FactorizationCensus> partial(static_cast<size_t>(nthreads));
    std::vector<std::thread> workers;
    for (int w = 0; w < nthreads; ++w) {
        workers.emplace_back([&, w]() {
            TupleDfs dfs(nu, r);
            for (int t = w; t < ntau; t += nthreads) dfs.run_census(t, t + 1);
            dfs.add_into(partial[static_cast<size_t>(w)]);
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& p : partial) {
        for (const auto& [k, v] : p.all) census.all[k] += v;
        for (const auto& [k, v] : p.transitive) census.transitive[k] += v;
    }
    return census;
}

// census cache shared across the ELSV / extraction sweeps
const FactorizationCensus& cached_census(const Partition& nu, int r, int threads) {
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, FactorizationCensus> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({nu, r});
        if (it != cache.end()) return it->second;
    }
    FactorizationCensus census = census_threaded(nu, r, threads);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(nu, r), std::move(census)).first->second;
}

}  // namespace

FactorizationCensus factorization_census(const Partition& nu, int r, int threads) {
    check_brute_budget(nu.size(), r);
    if (nu.size() < 1) throw std::invalid_argument("factorization_census: |nu| >= 1");
    return census_threaded(nu, r, threads);
}

Rational factorization_count_bruteforce(const HurwitzKey& key, int threads) {
    const int d = key.nu.size();
    if (d != key.mu.size()) throw std::invalid_argument("bruteforce: |nu| != |mu|");
    if (d < 1) throw std::invalid_argument("bruteforce: empty profile");
    check_brute_budget(d, key.r);
    mpz_class count = 0;
    if (threads > 1) {
        const auto& census = cached_census(key.nu, key.r, threads);
        const auto& m = key.connected ? census.transitive : census.all;
        auto it = m.find(key.mu);
        count = it == m.end() ? mpz_class(0) : it->second;
    } else {
        TupleDfs dfs(key.nu, key.r);
        dfs.run_target(key.mu, 0, key.r == 0 ? 1 : dfs.tau_count());
        FactorizationCensus census;
        dfs.add_into(census);
        const auto& m = key.connected ? census.transitive : census.all;
        auto it = m.find(key.mu);
        count = it == m.end() ? mpz_class(0) : it->second;
    }
    const mpz_class cnu = factorial(static_cast<unsigned long>(d)) / z_order(key.nu);
    return Rational(count * cnu, factorial(static_cast<unsigned long>(d)));
}

Rational factorization_count_frobenius(const HurwitzKey& key) {
    if (key.connected)
        throw std::invalid_argument("frobenius: disconnected counts only");
    const int d = key.nu.size();
    if (d != key.mu.size()) throw std::invalid_argument("frobenius: |nu| != |mu|");
    if (d > kFrobeniusMaxDegree) throw std::invalid_argument("frobenius: d <= 8");
    if (d == 0) throw std::invalid_argument("frobenius: empty profile");
    if (d == 1) return key.r == 0 ? Rational(1) : Rational(0);

    const CharacterTable& tbl = character_table(d);
    std::vector<int> tparts{2};
    for (int i = 2; i < d; ++i) tparts.push_back(1);
    const Partition tclass(tparts);

    Rational sum(0);
    for (const auto& lam : tbl.labels()) {
        const long dim = tbl.dimension(lam);
        Rational ratio(tbl.value(lam, tclass), dim);
        Rational pw(1);
        for (int i = 0; i < key.r; ++i) pw *= ratio;
        sum += Rational(tbl.value(lam, key.nu)) * Rational(tbl.value(lam, key.mu)) * pw;
    }
    const mpz_class dfact = factorial(static_cast<unsigned long>(d));
    const mpz_class cnu = dfact / z_order(key.nu);
    const mpz_class cmu = dfact / z_order(key.mu);
    mpz_class tpow;
    mpz_class tsize = tbl.class_size(tclass);
    mpz_pow_ui(tpow.get_mpz_t(), tsize.get_mpz_t(), static_cast<unsigned long>(key.r));
    return Rational(cnu * cmu * tpow, dfact * dfact) * sum;
}

namespace {

// sub-multisets of a partition, as partitions (possibly empty)
std::vector<Partition> sub_multisets(const Partition& p) {
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

bool multiset_contains(const std::vector<int>& big, const std::vector<int>& small) {
    auto it = big.begin();
    for (int v : small) {
        it = std::find(it, big.end(), v);
        if (it == big.end()) return false;
        ++it;
    }
    return true;
}

std::vector<int> multiset_minus(const std::vector<int>& big, const std::vector<int>& small) {
    std::vector<int> out = big;
    for (int v : small) out.erase(std::find(out.begin(), out.end(), v));
    return out;
}

using Provider = std::function<Rational(const Partition&, const Partition&, int)>;

// sum over multisets of >= 2 components of prod (Hc/rc!) / prod m!,
// with Hc = connected values from `conn`. Candidates are enumerated in a
// fixed canonical order with explicit multiplicities.
struct ComponentSum {
    std::vector<HurwitzTableKey> candidates;
    Provider conn;

    Rational run(const Partition& nu, const Partition& mu, int r, int min_components) {
        candidates.clear();
        for (const auto& nsub : sub_multisets(nu)) {
            if (nsub.length() == 0 || nsub.size() == 0) continue;
            for (const auto& msub : sub_multisets(mu)) {
                if (msub.size() != nsub.size()) continue;
                for (int rc = 0; rc <= r; ++rc) {
                    // parity: r == l(nu)+l(mu) (mod 2) for a connected cover
                    if ((rc + nsub.length() + msub.length()) % 2 != 0) continue;
                    // a multi-component decomposition never uses the whole key
                    if (min_components >= 2 && nsub == nu && msub == mu && rc == r) continue;
                    candidates.push_back({nsub, msub, rc});
                }
            }
        }
        Rational total(0);
        rec(0, nu.parts(), mu.parts(), r, 0, Rational(1), total, min_components);
        return total;
    }

private:
    void rec(size_t idx, std::vector<int> rem_nu, std::vector<int> rem_mu, int rem_r,
             int ncomp, Rational acc, Rational& total, int min_components) {
        if (rem_nu.empty() && rem_mu.empty() && rem_r == 0) {
            if (ncomp >= min_components) total += acc;
            return;
        }
        if (idx >= candidates.size()) return;
        // skip this candidate entirely
        rec(idx + 1, rem_nu, rem_mu, rem_r, ncomp, acc, total, min_components);
        const auto& [cnu, cmu, cr] = candidates[idx];
        Rational term = acc;
        std::vector<int> rn = std::move(rem_nu), rm = std::move(rem_mu);
        int rr = rem_r;
        for (int m = 1;; ++m) {
            if (cr > rr || !multiset_contains(rn, cnu.parts()) ||
                !multiset_contains(rm, cmu.parts()))
                break;
            rn = multiset_minus(rn, cnu.parts());
            rm = multiset_minus(rm, cmu.parts());
            rr -= cr;
            Rational hc = conn(cnu, cmu, cr) / Rational(factorial(static_cast<unsigned long>(cr)));
            term = term * hc / Rational(m);
            if (!term.is_zero()) rec(idx + 1, rn, rm, rr, ncomp + m, term, total, min_components);
        }
    }
};

Rational connected_double_hurwitz_memo(const Partition& nu, const Partition& mu, int r,
                                       std::map<HurwitzTableKey, Rational>& memo) {
    if ((r + nu.length() + mu.length()) % 2 != 0) return Rational(0);
    auto key = HurwitzTableKey{nu, mu, r};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational dis = factorization_count_frobenius({nu, mu, r, false});
    ComponentSum cs;
    cs.conn = [&memo](const Partition& a, const Partition& b, int rr) {
        return connected_double_hurwitz_memo(a, b, rr, memo);
    };
    // every multi-component decomposition uses strictly smaller profiles
    Rational multi = cs.run(nu, mu, r, 2);
    Rational conn = (dis / Rational(factorial(static_cast<unsigned long>(r))) - multi) *
                    Rational(factorial(static_cast<unsigned long>(r)));
    memo.emplace(std::move(key), conn);
    return conn;
}

}  // namespace

Rational connected_double_hurwitz(const Partition& nu, const Partition& mu, int r) {
    static std::mutex mu_lock;
    static std::map<HurwitzTableKey, Rational> memo;
    std::lock_guard lock(mu_lock);
    return connected_double_hurwitz_memo(nu, mu, r, memo);
}

int single_hurwitz_branch_points(int g, const Partition& mu) {
    return 2 * g - 2 + mu.size() + mu.length();
}

Rational single_hurwitz(int g, const Partition& mu) {
    if (g < 0 || mu.length() == 0) return Rational(0);
    const int d = mu.size();
    const int r = single_hurwitz_branch_points(g, mu);
    if (r < 0) return Rational(0);
    const Partition nu(std::vector<int>(static_cast<size_t>(d), 1));
    if (d <= kBruteForceMaxDegree && r <= kBruteForceMaxR) {
        const auto& census = cached_census(nu, r, static_cast<int>(std::thread::hardware_concurrency()));
        auto it = census.transitive.find(mu);
        mpz_class count = it == census.transitive.end() ? mpz_class(0) : it->second;
        return Rational(count, factorial(static_cast<unsigned long>(d)));
    }
    return connected_double_hurwitz(nu, mu, r);
}

HurwitzTable connected_disconnected_transform(const HurwitzTable& table,
                                              TransformDirection dir) {
    auto lookup = [&table](const Partition& nu, const Partition& mu, int r) -> Rational {
        if ((r + nu.length() + mu.length()) % 2 != 0) return Rational(0);
        auto it = table.find({nu, mu, r});
        if (it == table.end())
            throw std::invalid_argument("transform: table not closed under components (missing " +
                                        HurwitzKey{nu, mu, r, false}.to_string() + ")");
        return it->second;
    };

    HurwitzTable out;
    if (dir == TransformDirection::connected_to_disconnected) {
        for (const auto& [key, unused] : table) {
            const auto& [nu, mu, r] = key;
            (void)unused;
            ComponentSum cs;
            cs.conn = lookup;
            Rational hat = cs.run(nu, mu, r, 1);
            out[key] = hat * Rational(factorial(static_cast<unsigned long>(r)));
        }
    } else {
        std::map<HurwitzTableKey, Rational> memo;
        std::function<Rational(const Partition&, const Partition&, int)> conn =
            [&](const Partition& nu, const Partition& mu, int r) -> Rational {
            if ((r + nu.length() + mu.length()) % 2 != 0) return Rational(0);
            auto it = memo.find({nu, mu, r});
            if (it != memo.end()) return it->second;
            ComponentSum cs;
            cs.conn = conn;
            Rational multi = cs.run(nu, mu, r, 2);
            Rational hat = lookup(nu, mu, r) / Rational(factorial(static_cast<unsigned long>(r))) - multi;
            memo[{nu, mu, r}] = hat * Rational(factorial(static_cast<unsigned long>(r)));
            return memo.at({nu, mu, r});
        };
        for (const auto& [key, unused] : table) {
            const auto& [nu, mu, r] = key;
            (void)unused;
            out[key] = conn(nu, mu, r);
        }
    }
    return out;
}

bool cutjoin_hurwitz_check(int g, const Partition& mu) {
    const int r = single_hurwitz_branch_points(g, mu);
    if (r < 0) throw std::invalid_argument("cutjoin_hurwitz_check: r < 0");
    const auto& parts = mu.parts();
    const int n = mu.length();

    Rational lhs = Rational(z_order(mu)) * single_hurwitz(g, mu);

    Rational rhs(0);
    // joins over unordered position pairs
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> v = parts;
            v[static_cast<size_t>(i)] += v[static_cast<size_t>(j)];
            v.erase(v.begin() + j);
            Partition eta(std::move(v));
            rhs += Rational(static_cast<long>(parts[static_cast<size_t>(i)]) *
                            parts[static_cast<size_t>(j)]) *
                   Rational(z_order(eta)) * single_hurwitz(g, eta);
        }
    }
    // cuts, per position
    for (int i = 0; i < n; ++i) {
        const int mi = parts[static_cast<size_t>(i)];
        const Partition rest = mu.without(i);
        for (int p = 1; 2 * p <= mi; ++p) {
            const int q = mi - p;
            const Rational weight(p + q, p == q ? 2 : 1);
            if (g >= 1) {
                Partition nu = rest.merged(Partition{p, q});
                rhs += weight * Rational(z_order(nu)) * single_hurwitz(g - 1, nu);
            }
            // splits over labeled distributions of the remaining parts
            const auto subs = sub_multisets(rest);
            for (const auto& A : subs) {
                // labeled multiplicity: prod_v C(m_v(rest), m_v(A))
                mpz_class mult = 1;
                {
                    std::vector<int> vals = rest.parts();
                    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                    for (int v : vals) {
                        auto count_of = [v](const Partition& pp) {
                            return std::count(pp.parts().begin(), pp.parts().end(), v);
                        };
                        mult *= binomial(static_cast<unsigned long>(count_of(rest)),
                                         static_cast<unsigned long>(count_of(A)));
                    }
                }
                Partition B(multiset_minus(rest.parts(), A.parts()));
                Partition nu1 = A.merged(Partition{p});
                Partition nu2 = B.merged(Partition{q});
                for (int g1 = 0; g1 <= g; ++g1) {
                    const int g2 = g - g1;
                    const int r1 = single_hurwitz_branch_points(g1, nu1);
                    if (r1 < 0 || r1 > r - 1) continue;
                    Rational h1 = single_hurwitz(g1, nu1);
                    if (h1.is_zero()) continue;
                    Rational h2 = single_hurwitz(g2, nu2);
                    if (h2.is_zero()) continue;
                    rhs += weight * Rational(mult) *
                           Rational(binomial(static_cast<unsigned long>(r - 1),
                                             static_cast<unsigned long>(r1))) *
                           Rational(z_order(nu1)) * h1 * Rational(z_order(nu2)) * h2;
                }
            }
        }
    }
    return lhs == rhs;
}

}  // namespace wittenlab
