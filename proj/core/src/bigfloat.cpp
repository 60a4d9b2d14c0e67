#include "mops/bigfloat.hpp"

#include <vector>

namespace mops {

std::string BigFloat::to_string(size_t digits) const {
    char* s = nullptr;
    mpfr_exp_t e;
    s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string body(s);
    mpfr_free_str(s);
    std::string sign;
    if (!body.empty() && body[0] == '-') {
        sign = "-";
        body = body.substr(1);
    }
    return sign + "0." + body + "e" + std::to_string(e);
}

#define MOPS_UNARY(name, fn)                    \
    BigFloat name(const BigFloat& a) {          \
        BigFloat r(a.precision());              \
        fn(r.raw(), a.raw(), MPFR_RNDN);        \
        return r;                               \
    }

MOPS_UNARY(abs, mpfr_abs)
MOPS_UNARY(sqrt, mpfr_sqrt)
MOPS_UNARY(cbrt, mpfr_cbrt)
MOPS_UNARY(sin, mpfr_sin)
MOPS_UNARY(cos, mpfr_cos)
MOPS_UNARY(log, mpfr_log)
MOPS_UNARY(exp, mpfr_exp)

#undef MOPS_UNARY

BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_int(const BigFloat& a, long n) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

FloatInterval FloatInterval::from_rational(const Rational& q, mpfr_prec_t bits) {
    FloatInterval r{BigFloat(bits), BigFloat(bits)};
    mpfr_set_q(r.lo.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.raw(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::point(const BigFloat& x) { return {x, x}; }

FloatInterval fi_add(const FloatInterval& a, const FloatInterval& b, mpfr_prec_t bits) {
    FloatInterval r{BigFloat(bits), BigFloat(bits)};
    mpfr_add(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
    mpfr_add(r.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
    return r;
}

FloatInterval fi_mul(const FloatInterval& a, const FloatInterval& b, mpfr_prec_t bits) {
    // min/max over the four endpoint products, rounded outward
    FloatInterval r{BigFloat(bits), BigFloat(bits)};
    mpfr_t t;
    mpfr_init2(t, bits);
    const mpfr_srcptr as[2] = {a.lo.raw(), a.hi.raw()};
    const mpfr_srcptr bs[2] = {b.lo.raw(), b.hi.raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo.raw()) < 0) mpfr_set(r.lo.raw(), t, MPFR_RNDD);
            mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi.raw()) > 0) mpfr_set(r.hi.raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

ComplexBF pow_int(const ComplexBF& a, long n) {
    ComplexBF r{BigFloat::from_long(1, a.re.precision()), BigFloat(a.re.precision())};
    ComplexBF base = a;
    long e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace mops
