#pragma once

#include "wittenlab/hodge.hpp"

#include <map>
#include <vector>

namespace wittenlab {

// D^bullet_{nu,e}(lambda): Laurent polynomial in lambda built from connected
// D_{g,nu_c,e_c} values by the exponential transform over components.
// Coefficients of order <= complete_upto are fully determined by the g <= 1
// Hodge data; higher orders would need genus-2 linear Hodge integrals.
struct DSeries {
    std::map<int, Rational> coeff;
    int complete_upto = 0;
};

// connected building block D_{g,nu,e}
Rational d_series_entry(int g, const Partition& nu, const Partition& e,
                        const HodgeTable& table, CorrelatorCache& cache);

DSeries build_d_series(const Partition& nu, const Partition& e, int order_cap,
                       const HodgeTable& table, CorrelatorCache& cache);

// Phi^bullet_{mu,nu}(-lambda) coefficient of lambda^r, i.e.
// (-1)^r H^bullet_r(mu,nu) / r! from the Frobenius formula.
Rational phi_coefficient(const Partition& mu, const Partition& nu, int r);

struct Theorem1Report {
    bool ok = true;
    // (chi, lambda order l(mu)-chi) pairs actually asserted zero
    std::vector<std::pair<int, int>> checked;
    std::vector<int> skipped_chis;  // in range but beyond the populated table
};

// Asserts [lambda^{l(mu)-chi}] sum_nu Phi(mu,nu)(-lambda) z_nu D(nu,e)(lambda) = 0
// for every chi in [chi_min, chi_max] allowed by |e| < |mu|+l(mu)-chi whose
// coefficient is complete over the populated Hodge table.
Theorem1Report theorem1_check(const Partition& mu, const Partition& e, int chi_min,
                              const HodgeTable& table, CorrelatorCache& cache);

}  // namespace wittenlab
