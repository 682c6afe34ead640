#include "wittenlab/bigfloat.hpp"

#include <cstdlib>
#include <sstream>

namespace wittenlab {

std::string BigFloat::to_string(size_t digits) const {
    if (digits == 0)
        digits = static_cast<size_t>(static_cast<double>(precision()) * 0.30103) + 2;
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::ostringstream os;
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    os << (neg ? "-" : "") << "0." << mant << "e" << exp;
    return os.str();
}

#define WITTENLAB_BF_UNARY(name, fn)              \
    BigFloat name(const BigFloat& a) {            \
        BigFloat r(a.precision());                \
        fn(r.raw(), a.raw(), MPFR_RNDN);          \
        return r;                                 \
    }

WITTENLAB_BF_UNARY(bf_abs, mpfr_abs)
WITTENLAB_BF_UNARY(bf_sqrt, mpfr_sqrt)
WITTENLAB_BF_UNARY(bf_exp, mpfr_exp)
WITTENLAB_BF_UNARY(bf_log, mpfr_log)
WITTENLAB_BF_UNARY(bf_sinh, mpfr_sinh)
WITTENLAB_BF_UNARY(bf_cosh, mpfr_cosh)

#undef WITTENLAB_BF_UNARY

BigFloat bf_lngamma(const BigFloat& a) {
    BigFloat r(a.precision());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, a.raw(), MPFR_RNDN);
    return r;
}

BigFloat bf_pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat bf_pow_si(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat bf_pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.raw(), 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return r;
}

}  // namespace wittenlab
