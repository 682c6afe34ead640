#pragma once

#include "wittenlab/bigfloat.hpp"

#include <functional>

namespace wittenlab {

// Double-exponential (exp-sinh) quadrature on (0, inf). Handles integrable
// power singularities at 0 and exponential decay at infinity. Throws on
// non-convergence within the level budget.
BigFloat integrate_zero_inf(const std::function<BigFloat(const BigFloat&)>& f,
                            mpfr_prec_t prec, const BigFloat& rel_tol,
                            int max_level = 11);

// Iterated 2D version over (0,inf) x (0,inf).
BigFloat integrate_zero_inf_2d(
    const std::function<BigFloat(const BigFloat&, const BigFloat&)>& f, mpfr_prec_t prec,
    const BigFloat& rel_tol);

}  // namespace wittenlab
