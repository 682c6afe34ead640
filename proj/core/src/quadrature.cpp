#include "wittenlab/quadrature.hpp"

#include <stdexcept>

namespace wittenlab {

namespace {

// x(t) = exp(c sinh t), weight x'(t) = c cosh t x(t), with c = pi/2.
struct ExpSinhMap {
    BigFloat c;
    explicit ExpSinhMap(mpfr_prec_t prec) : c(BigFloat::pi(prec) / BigFloat(2L, prec)) {}

    BigFloat node(const BigFloat& t) const { return bf_exp(c * bf_sinh(t)); }
    BigFloat weight(const BigFloat& t) const { return c * bf_cosh(t) * node(t); }
};

}  // namespace

BigFloat integrate_zero_inf(const std::function<BigFloat(const BigFloat&)>& f,
                            mpfr_prec_t prec, const BigFloat& rel_tol, int max_level) {
    const mpfr_prec_t wp = prec + 32;
    const ExpSinhMap map(wp);
    const BigFloat tiny = bf_pow2(-static_cast<long>(wp) - 16, wp);

    auto term = [&](const BigFloat& t) -> BigFloat {
        BigFloat x = map.node(t);
        if (x.is_zero()) return BigFloat(wp);
        return f(x) * map.weight(t);
    };

    // Sum at step h over k = +-k_start, +-(k_start + k_step), ..., stopping on
    // tails negligible against the largest term seen (relative cutoff, so
    // integrals of tiny magnitude still resolve).
    BigFloat max_term(wp);
    auto sweep = [&](const BigFloat& h, long k_start, long k_step) {
        BigFloat sum(wp);
        for (int dir = 0; dir < 2; ++dir) {
            int dead = 0;
            const long sgn = dir == 0 ? 1 : -1;
            for (long k = sgn * k_start;; k += sgn * k_step) {
                BigFloat v = term(BigFloat(k, wp) * h);
                sum += v;
                BigFloat av = bf_abs(v);
                if (max_term < av) max_term = av;
                if (av <= tiny * max_term) {
                    if (++dead >= 3) break;
                } else {
                    dead = 0;
                }
                if (std::abs(k) > 8000) throw std::runtime_error("quadrature: node overflow");
            }
        }
        return sum;
    };

    BigFloat h(1L, wp);
    BigFloat total = term(BigFloat(0L, wp));
    max_term = bf_abs(total);
    total += sweep(h, 1, 1);
    BigFloat prev = total * h;
    for (int level = 1; level <= max_level; ++level) {
        h = h / BigFloat(2L, wp);
        // new nodes are the odd multiples of the refined step
        total += sweep(h, 1, 2);
        BigFloat cur = total * h;
        BigFloat diff = bf_abs(cur - prev);
        if (level >= 3 && diff <= rel_tol * bf_abs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature: did not converge");
}

BigFloat integrate_zero_inf_2d(
    const std::function<BigFloat(const BigFloat&, const BigFloat&)>& f, mpfr_prec_t prec,
    const BigFloat& rel_tol) {
    // inner integrals must sit well below the outer refinement target, or the
    // outer level-doubling stalls on inner noise
    const BigFloat inner_tol = rel_tol * bf_pow2(-24, prec);
    auto outer = [&](const BigFloat& x) -> BigFloat {
        return integrate_zero_inf([&](const BigFloat& y) { return f(x, y); }, prec,
                                  inner_tol);
    };
    return integrate_zero_inf(outer, prec, rel_tol);
}

}  // namespace wittenlab
