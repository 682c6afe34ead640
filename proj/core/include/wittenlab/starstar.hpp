#pragma once

#include "wittenlab/bigfloat.hpp"
#include "wittenlab/psi.hpp"

#include <vector>

namespace wittenlab {

struct StarStarResult {
    BigFloat residual;  // |value of the relation at the sample|
    BigFloat scale;     // sum of term magnitudes
    bool pass = false;  // residual <= rel_bound * scale
};

// High-precision sample evaluation of the N^{m+1/2}-stratum relation: for
// each i, the (2k_i+1)!!/(2^{k_i+1}k_i!) term, the double-factorial cut
// terms at 1/4 normalization, the degenerate pinch term at (g,n) = (1,1),
// and the join terms entering through the coefficient isolated from the
// (x_i+x_j)^{k_i+k_j-1/2} transform polynomial (the alternating expansion is
// performed in-code and must give 1). The combination is an exact identity,
// so the residual is pure roundoff at any sample.
StarStarResult starstar_numeric_check(int g, const std::vector<int>& ks,
                                      const std::vector<Rational>& xs, mpfr_prec_t prec,
                                      CorrelatorCache& cache, double rel_bound = 1e-20);

// The alternating-expansion coefficient of s_i^{k_i+1} s_j^{k_j+1/2} in
// (s_i s_j^{w+2} + ... + s_i^{w+2} s_j)/(sqrt(s_i)+sqrt(s_j)); equals 1.
long join_case_coefficient(int ki, int kj);

}  // namespace wittenlab
