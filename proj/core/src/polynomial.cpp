#include "mops/polynomial.hpp"

#include "mops/errors.hpp"

namespace mops {

ExactPolynomial ExactPolynomial::monomial(size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::linear(const Rational& a) {
    return ExactPolynomial({-a, Rational(1)});
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::monic() const {
    if (is_zero()) throw ValidationError("monic(): zero polynomial");
    if (is_monic()) return *this;
    Rational inv = 1 / c_.back();
    return inv * (*this);
}

Rational ExactPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FloatInterval ExactPolynomial::eval_interval(const Rational& x, mpfr_prec_t bits) const {
    FloatInterval xi = FloatInterval::from_rational(x, bits);
    FloatInterval acc{BigFloat(bits), BigFloat(bits)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = fi_mul(acc, xi, bits);
        acc = fi_add(acc, FloatInterval::from_rational(*it, bits), bits);
    }
    return acc;
}

ComplexBF ExactPolynomial::eval_complex(const ComplexBF& x) const {
    mpfr_prec_t bits = x.re.precision();
    ComplexBF acc{BigFloat(bits), BigFloat(bits)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x;
        acc.re = acc.re + BigFloat::from_rational(*it, bits);
    }
    return acc;
}

BigFloat ExactPolynomial::eval_bigfloat(const BigFloat& x) const {
    mpfr_prec_t bits = x.precision();
    BigFloat acc(bits);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + BigFloat::from_rational(*it, bits);
    }
    return acc;
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return ExactPolynomial(std::move(v));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return ExactPolynomial(std::move(v));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ExactPolynomial::zero();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return ExactPolynomial(std::move(v));
}

ExactPolynomial operator*(const Rational& s, const ExactPolynomial& a) {
    std::vector<Rational> v = a.c_;
    for (auto& c : v) c *= s;
    return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::shifted_power(const Rational& a, unsigned n) {
    ExactPolynomial r = one();
    ExactPolynomial lin = linear(a);
    for (unsigned i = 0; i < n; ++i) r = r * lin;
    return r;
}

FloatEval poly_eval_float(const ExactPolynomial& p, const BigFloat& x, mpfr_prec_t bits) {
    if (bits < 53) throw ValidationError("poly_eval_float: bits must be >= 53");
    FloatInterval xi = FloatInterval::point(x);
    FloatInterval acc{BigFloat(bits), BigFloat(bits)};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = fi_mul(acc, xi, bits);
        acc = fi_add(acc, FloatInterval::from_rational(*it, bits), bits);
    }
    BigFloat mid = acc.midpoint();
    // outward distances absorb the rounding of the midpoint itself
    BigFloat up(bits), down(bits);
    mpfr_sub(up.raw(), acc.hi.raw(), mid.raw(), MPFR_RNDU);
    mpfr_sub(down.raw(), mid.raw(), acc.lo.raw(), MPFR_RNDU);
    FloatEval r{mid, up > down ? up : down, acc.sign() != 0, acc.sign()};
    return r;
}

int certified_sign(const ExactPolynomial& p, const Rational& x, mpfr_prec_t start_bits) {
    for (mpfr_prec_t bits = start_bits; bits <= 2048; bits *= 2) {
        int s = p.eval_interval(x, bits).sign();
        if (s != 0) return s;
    }
    return sgn(p.eval(x));
}

}  // namespace mops
