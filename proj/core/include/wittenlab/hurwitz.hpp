#pragma once

#include "wittenlab/partition.hpp"
#include "wittenlab/rational.hpp"

#include <map>
#include <string>
#include <tuple>

namespace wittenlab {

// Double Hurwitz datum: ramification nu over 0, mu over infinity, r simple
// branch points, connected or not. chi = l(nu) + l(mu) - r.
struct HurwitzKey {
    Partition nu;
    Partition mu;
    int r = 0;
    bool connected = false;

    std::string to_string() const;
    friend bool operator<(const HurwitzKey& a, const HurwitzKey& b) {
        return std::tie(a.nu, a.mu, a.r, a.connected) < std::tie(b.nu, b.mu, b.r, b.connected);
    }
    friend bool operator==(const HurwitzKey& a, const HurwitzKey& b) {
        return std::tie(a.nu, a.mu, a.r, a.connected) == std::tie(b.nu, b.mu, b.r, b.connected);
    }
};

inline constexpr int kBruteForceMaxDegree = 5;
inline constexpr int kBruteForceMaxR = 8;
inline constexpr int kFrobeniusMaxDegree = 8;

// Exhaustive transposition-tuple counts with a fixed sigma0 of type nu:
// product cycle type -> #tuples, with and without the transitivity
// restriction. One pass covers every mu at once.
struct FactorizationCensus {
    std::map<Partition, mpz_class> all;
    std::map<Partition, mpz_class> transitive;
};
FactorizationCensus factorization_census(const Partition& nu, int r, int threads = 1);

// count * |C_nu| / d! with the count from depth-first enumeration, pruned by
// the remaining-distance parity bound. Budget d <= 5, r <= 8.
Rational factorization_count_bruteforce(const HurwitzKey& key, int threads = 1);

// Disconnected double Hurwitz number by the Frobenius character sum,
// H = (|C_nu||C_mu||T|^r / d!^2) sum_lambda chi(nu)chi(mu)(chi(T)/dim)^r.
Rational factorization_count_frobenius(const HurwitzKey& key);

// Connected value from Frobenius data through the logarithmic transform;
// no enumeration budget beyond the d <= 8 character tables.
Rational connected_double_hurwitz(const Partition& nu, const Partition& mu, int r);

// Single Hurwitz number H_{g,mu} (nu = (1^d), r = 2g-2+|mu|+l(mu)); uses the
// exhaustive count within budget and the Frobenius route beyond it.
Rational single_hurwitz(int g, const Partition& mu);
int single_hurwitz_branch_points(int g, const Partition& mu);

// Tables keyed by (nu, mu, r); values in the plain normalization (not /r!).
using HurwitzTableKey = std::tuple<Partition, Partition, int>;
using HurwitzTable = std::map<HurwitzTableKey, Rational>;

enum class TransformDirection { connected_to_disconnected, disconnected_to_connected };

// Exponential (connected -> disconnected) and logarithmic transforms on
// partition-indexed data: a disconnected cover contributes the product of
// its components' values with the r-multinomial and identical-component
// symmetry factors. Throws if the input table lacks a needed smaller key.
HurwitzTable connected_disconnected_transform(const HurwitzTable& table,
                                              TransformDirection dir);

// Exact cut-and-join recursion for single Hurwitz numbers, all values from
// the exhaustive oracle:
//   z_mu H_{g,mu} = sum_{{i,j}} mu_i mu_j z_eta H_{g,eta}
//     + sum_i sum_{p<=q} (p+q)/(1+delta) [ z_nu H_{g-1,nu}
//         + sum_{g1+g2} sum_{labeled splits} C(r-1,r1) z_{nu1}H_{g1,nu1} z_{nu2}H_{g2,nu2} ]
bool cutjoin_hurwitz_check(int g, const Partition& mu);

}  // namespace wittenlab
