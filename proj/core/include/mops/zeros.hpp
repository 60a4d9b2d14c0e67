#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mops/bigfloat.hpp"
#include "mops/polynomial.hpp"
#include "mops/rational.hpp"

namespace mops {

// One certified enclosure: p(lo) and p(hi) have opposite exact signs.
struct Enclosure {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

// Sorted disjoint enclosures of all real zeros of one polynomial (all zeros
// simple and inside the queried support).  Keeps the polynomial so that the
// enclosures can be refined later.
struct ZeroSet {
    ExactPolynomial poly;
    std::vector<Enclosure> enclosures;
    Rational scale = 1;                  // multiplier applied to scaled views
    std::vector<unsigned> source_index;  // originating multi-index, if any

    size_t count() const { return enclosures.size(); }
    std::vector<BigFloat> midpoints(mpfr_prec_t bits = 128) const;
    std::vector<double> scaled_midpoints() const;
};

struct IsolationOptions {
    // scan-grid warp exponent toward both support endpoints
    unsigned grading = 3;
    // initial upper bound to try for unbounded supports
    std::optional<Rational> upper_hint;
    // grid-size budget; "isolation failed" beyond this
    unsigned long max_grid = 1ul << 21;
};

// Certified isolation of all real zeros of a monic polynomial inside
// [lo, hi] ([lo, inf) when hi is nullopt).  Succeeds only when exactly
// degree(p) sign-change intervals are found, which certifies one simple zero
// per interval.
ZeroSet isolate_zeros(const ExactPolynomial& p, const Rational& lo,
                      std::optional<Rational> hi, const IsolationOptions& opts = {});

// Bisect every enclosure until width <= tol * max(1, |midpoint|);
// endpoint signs stay exact-certified.
ZeroSet refine(ZeroSet z, const Rational& tol);

// True iff strictly between consecutive zeros of z2 lies exactly one zero of
// z1; degree(z2) = degree(z1) + 1.  Refines enclosures until the pairwise
// order is decidable, throws NumericError("undecidable at precision") when
// the budget runs out.
bool interlacing_check(const ZeroSet& z1, const ZeroSet& z2);

// Right-continuous step CDF of the scaled zero midpoints.
struct EmpiricalCDF {
    std::vector<double> points;  // sorted

    double value_at(double x) const;
};

EmpiricalCDF empirical_cdf(const ZeroSet& z, mpfr_prec_t bits = 128);

// sup-norm distance against a monotone CDF, evaluated from both sides of
// every jump.
double ks_distance(const EmpiricalCDF& e, const std::function<double(double)>& cdf);

// Normalized logarithmic derivative of the scaled polynomial q(x) = p(x/scale):
//   q'(x) / (deg(p) * q(x)) = (1/scale) p'(x/scale) / (deg(p) p(x/scale)),
// evaluated at escalating precision until 1e-20 relative agreement.
ComplexBF log_derivative(const ExactPolynomial& p, const ComplexBF& x, const Rational& scale = 1);

}  // namespace mops
