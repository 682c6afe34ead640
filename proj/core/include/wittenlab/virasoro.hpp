#pragma once

#include "wittenlab/psi.hpp"
#include "wittenlab/series.hpp"

namespace wittenlab {

// First-derivative index convention in L_n. Some presentations print
// t~_{n-1} for general n, but the L_{-1}, L_0 cases force index n+1; both
// variants are implemented and the residual suite reports which one
// annihilates tau.
enum class FirstTermConvention { shifted_up, printed_down };

struct VirasoroOperator {
    int index;            // n >= -1
    int first_term_index; // the t~-index differentiated in the -(1/2) d/dt term
    Rational constant;    // 1/16 for n = 0, zero otherwise (t0^2/4 handled separately)

    static VirasoroOperator make(int n, FirstTermConvention conv);
};

// F(t~) = sum_g <exp sum t~_n sigma~_n>_g truncated to indices <= K and
// total degree (number of insertions) <= D. The genus of each monomial is
// fixed by 3g - 3 + n = sum k_i.
SparseSeries build_free_energy(int K, int D, CorrelatorCache& cache);

// Applies L_n to a series. Output is clipped to the window on which every
// coefficient is fully determined by the input window:
//   degree <= D - 2 and indices <= K - n for n >= 1,
//   degree <= D - 1 and indices <= K   for n in {-1, 0}.
SparseSeries apply_virasoro(int n, const SparseSeries& s,
                            FirstTermConvention conv = FirstTermConvention::shifted_up);

// apply_virasoro(n, exp(build_free_energy(K, D))) on the reliable window;
// identically zero under the correct convention.
SparseSeries virasoro_residual(int n, int K, int D, CorrelatorCache& cache,
                               FirstTermConvention conv = FirstTermConvention::shifted_up);

}  // namespace wittenlab
