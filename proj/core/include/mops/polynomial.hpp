#pragma once

#include <optional>
#include <vector>

#include "mops/bigfloat.hpp"
#include "mops/rational.hpp"

namespace mops {

// Dense univariate polynomial with exact rational coefficients, stored by
// ascending power with no trailing zeros.  The zero polynomial has an empty
// coefficient vector and degree -1.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ExactPolynomial zero() { return ExactPolynomial(); }
    static ExactPolynomial one() { return constant(Rational(1)); }
    static ExactPolynomial constant(const Rational& c) {
        return ExactPolynomial(std::vector<Rational>{c});
    }
    // c * x^k
    static ExactPolynomial monomial(size_t k, const Rational& c);
    // x - a
    static ExactPolynomial linear(const Rational& a);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    ExactPolynomial derivative() const;
    ExactPolynomial monic() const;  // divide by leading coefficient

    // Exact Horner evaluation over the rationals.
    Rational eval(const Rational& x) const;

    // Certified enclosure of p(x) at the given working precision.
    FloatInterval eval_interval(const Rational& x, mpfr_prec_t bits) const;

    ComplexBF eval_complex(const ComplexBF& x) const;
    BigFloat eval_bigfloat(const BigFloat& x) const;

    friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator*(const Rational& s, const ExactPolynomial& a);
    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.c_ == b.c_;
    }

    // (x - a)^n expanded exactly
    static ExactPolynomial shifted_power(const Rational& a, unsigned n);

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Result of floating evaluation with a rigorous running error bound.
struct FloatEval {
    BigFloat value;       // interval midpoint
    BigFloat error_bound; // half-width; |true - value| <= error_bound
    bool sign_determined; // false when the enclosure straddles zero
    int sign;             // valid only when sign_determined
};

// pre: bits >= 53.  Callers escalate precision while !sign_determined.
FloatEval poly_eval_float(const ExactPolynomial& p, const BigFloat& x, mpfr_prec_t bits);

// Sign of p at a rational point, certified: interval evaluation at
// escalating precision, exact rational evaluation as the last resort.
// Returns -1/0/+1 (0 only when x is exactly a root).
int certified_sign(const ExactPolynomial& p, const Rational& x, mpfr_prec_t start_bits = 96);

}  // namespace mops
