#pragma once

#include "wittenlab/partition.hpp"
#include "wittenlab/rational.hpp"

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace wittenlab {

// (genus, multiset of psi-exponents), canonically sorted descending.
// Identifies <tau_{k1}...tau_{kn}>_g.
struct CorrelatorKey {
    int genus = 0;
    std::vector<int> exponents;  // sorted descending, entries >= 0

    CorrelatorKey() = default;
    CorrelatorKey(int g, std::vector<int> ks);

    int n() const { return static_cast<int>(exponents.size()); }
    long exponent_sum() const;
    // Sum k_i = 3g - 3 + n
    bool dimension_ok() const { return exponent_sum() == 3L * genus - 3 + n(); }
    bool stable() const { return 2 * genus - 2 + n() > 0; }

    std::string to_string() const;

    friend bool operator==(const CorrelatorKey& a, const CorrelatorKey& b) {
        return a.genus == b.genus && a.exponents == b.exponents;
    }
};

struct CorrelatorKeyHash {
    size_t operator()(const CorrelatorKey& k) const;
};

// Memoized values keyed by CorrelatorKey. Concurrent lookups are fine; a
// duplicated concurrent computation of the same key writes identical values.
class CorrelatorCache {
public:
    bool lookup(const CorrelatorKey& key, Rational& out) const;
    void store(const CorrelatorKey& key, const Rational& value);
    size_t size() const;
    std::vector<std::pair<CorrelatorKey, Rational>> snapshot_sorted() const;
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<CorrelatorKey, Rational, CorrelatorKeyHash> map_;
};

// <tau_{k1}...tau_{kn}>_g via the topological-gravity recursion on the
// largest exponent, in plain (untilded) normalization. Total function:
// returns 0 for dimension-violating, unstable, or empty keys.
Rational psi_correlator(const CorrelatorKey& key, CorrelatorCache& cache);

// Convenience overload with a process-wide cache.
Rational psi_correlator(const CorrelatorKey& key);
CorrelatorCache& global_correlator_cache();

// tilde value = plain * prod (2k_i+1)!!
Rational tilde_factor(const std::vector<int>& exponents);

// (n-3)!/prod k_i! ; requires sum k_i = n - 3, n >= 3.
Rational genus0_closed_form(const std::vector<int>& exponents);

// 1/(24^g g!) = <tau_{3g-2}>_g ; requires g >= 1.
Rational one_point_closed_form(int g);

// Evaluates the recursion in both the tilde form and the coefficient-
// extracted plain form and checks that the two agree term by term under
// multiplication by prod_{l != i} (2k_l + 1). Base keys <tau_0^3>_0 and
// <tau_1>_1 reduce to base data and return true.
bool sharp_vs_star_check(const CorrelatorKey& key, CorrelatorCache& cache);

}  // namespace wittenlab
