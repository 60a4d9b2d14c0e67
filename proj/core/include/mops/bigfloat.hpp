#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mops/rational.hpp"

namespace mops {

// RAII wrapper around mpfr_t.  Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits = 128) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t bits,
                                  mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }
    static BigFloat from_double(double d, mpfr_prec_t bits = 53) {
        BigFloat r(bits);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static BigFloat from_long(long n, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // exact: every finite binary float is a rational
    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    std::string to_string(size_t digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(long a, const BigFloat& b) {
        BigFloat r(b.precision());
        mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, long b) { return b * a; }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat cbrt(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat exp(const BigFloat& a);
// a^b for real a > 0
BigFloat pow(const BigFloat& a, const BigFloat& b);
BigFloat pow_int(const BigFloat& a, long n);
BigFloat hypot(const BigFloat& a, const BigFloat& b);

// Closed interval [lo, hi] guaranteed to contain the exact value; all
// operations round outward.
struct FloatInterval {
    BigFloat lo, hi;

    static FloatInterval from_rational(const Rational& q, mpfr_prec_t bits);
    static FloatInterval point(const BigFloat& x);

    // +1 if the whole interval is positive, -1 if negative, 0 if it
    // contains zero (sign not determined at this precision).
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }
    BigFloat width() const { return hi - lo; }
    BigFloat midpoint() const { return (lo + hi) / 2; }
};

FloatInterval fi_add(const FloatInterval& a, const FloatInterval& b, mpfr_prec_t bits);
FloatInterval fi_mul(const FloatInterval& a, const FloatInterval& b, mpfr_prec_t bits);

// Complex numbers in rectangular big-float form.
struct ComplexBF {
    BigFloat re, im;

    ComplexBF() = default;
    ComplexBF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexBF from_doubles(double r, double i, mpfr_prec_t bits) {
        return {BigFloat::from_double(r, bits), BigFloat::from_double(i, bits)};
    }
    static ComplexBF real(const BigFloat& r) {
        return {r, BigFloat(r.precision())};
    }
    ComplexBF conj() const { return {re, -im}; }
    BigFloat abs() const { return hypot(re, im); }

    friend ComplexBF operator+(const ComplexBF& a, const ComplexBF& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBF operator-(const ComplexBF& a, const ComplexBF& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexBF operator*(const ComplexBF& a, const ComplexBF& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexBF operator/(const ComplexBF& a, const ComplexBF& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend ComplexBF operator-(const ComplexBF& a) { return {-a.re, -a.im}; }
};

ComplexBF pow_int(const ComplexBF& a, long n);

}  // namespace mops
