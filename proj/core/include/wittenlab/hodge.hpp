#pragma once

#include "wittenlab/partition.hpp"
#include "wittenlab/psi.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace wittenlab {

// (genus, psi-exponent multiset, lambda index j) identifying
// <lambda_j psi^{k_1}...psi^{k_n}>_g.
struct HodgeKey {
    int genus = 0;
    std::vector<int> exponents;  // sorted descending
    int lambda_index = 0;

    HodgeKey() = default;
    HodgeKey(int g, std::vector<int> ks, int j);
    bool dimension_ok() const;
    std::string to_string() const;
    friend bool operator<(const HodgeKey& a, const HodgeKey& b) {
        return std::tie(a.genus, a.lambda_index, a.exponents) <
               std::tie(b.genus, b.lambda_index, b.exponents);
    }
    friend bool operator==(const HodgeKey& a, const HodgeKey& b) {
        return a.genus == b.genus && a.lambda_index == b.lambda_index &&
               a.exponents == b.exponents;
    }
};

// One-lambda values populated by the ELSV extraction (j = 1, g = 1 in this
// artifact). Lookups outside the populated range raise.
class HodgeTable {
public:
    void set(const HodgeKey& key, const Rational& value);
    Rational get(const HodgeKey& key) const;  // throws std::out_of_range when absent
    bool has(const HodgeKey& key) const;
    const std::map<HodgeKey, Rational>& entries() const { return map_; }

private:
    std::map<HodgeKey, Rational> map_;
};

// integral of Lambda^vee_g(1) * prod_j (1-psi)^{e_j} / prod_i (1-w_i psi_i),
// expanded through psi correlators (lambda_0) and the extracted table
// (lambda_j, j >= 1). Unstable conventions: (0,1) -> 1/w^2 and the (0,2)
// pairing int psi_1^a psi_2^b = (-1)^b at a+b = -1, which gives 1/(w1+w2)
// for two weighted points and sum_c C(e,c) w^{-1-c} for a weighted point
// against an e-point. `alternating` selects Lambda^vee (default) over the
// all-plus Lambda variant.
Rational linear_hodge_integral(int g, const std::vector<Rational>& weights,
                               const std::vector<int>& epowers, const HodgeTable& table,
                               CorrelatorCache& cache, bool alternating = true);

// e-free convenience form used by the ELSV and cut-and-join checks.
Rational hodge_rational_integral(int g, const std::vector<Rational>& weights,
                                 const HodgeTable& table, CorrelatorCache& cache,
                                 bool alternating = true);

// r!/|Aut mu| prod(mu_i^{mu_i}/mu_i!) * hodge integral; equals H_{g,mu}.
Rational elsv_rhs(int g, const Partition& mu, const HodgeTable& table,
                  CorrelatorCache& cache);

struct ExtractionResult {
    HodgeTable table;
    bool consistent = false;
    int unknowns = 0;
    int equations = 0;
};

// Inverts ELSV against exhaustive/Frobenius Hurwitz data at genus 1 to
// obtain all <lambda_1 psi^k>_1 with n <= nmax, from mu with l(mu) <= nmax
// and |mu| <= dmax. The overdetermined exact system must be consistent.
ExtractionResult extract_hodge_table(int nmax = 4, int dmax = 6);

enum class GammaKind { gamma_r, gamma_join, gamma_cut1, gamma_cut2 };

// Graph contributions exactly as displayed: Gamma_r and Gamma_J take no
// extra indices beyond (i, j); Gamma_C1/C2 take (i, p). Gamma_C2 returns the
// sum over genus and partition splittings, unstable vertices included.
Rational gamma_value(GammaKind kind, int g, const Partition& mu, int i, int jp,
                     const HodgeTable& table, CorrelatorCache& cache);

// W(g,mu) = prod(mu_i^{mu_i+1}/mu_i!) * hodge integral = |Aut mu| prod mu_i * Gamma_r.
Rational cutjoin_w(int g, const Partition& mu, const HodgeTable& table,
                   CorrelatorCache& cache);

// Exact cut-and-join identity over the Gamma contributions,
//   r W(g,mu) = sum_{{i,j}} mu_i mu_j W(g,eta)
//     + sum_i sum_{p<=q} (p+q)/(1+delta) [W(g-1,nu) + sum W(g1,nu1) W(g2,nu2)],
// the unique weighting balancing brute-force Hurwitz data.
bool cutjoin_relation_check(int g, const Partition& mu, const HodgeTable& table,
                            CorrelatorCache& cache);

}  // namespace wittenlab
