#pragma once

#include <utility>
#include <vector>

#include "mops/bigfloat.hpp"
#include "mops/rational.hpp"

namespace mops {

enum class DensityKind { w, v, u, g, xg };

const char* density_kind_name(DensityKind k);
DensityKind density_kind_from_name(const std::string& name);

// c_r = (r+1)^{r+1} / r^r, the right endpoint of the supports on the hat scale.
Rational support_endpoint(unsigned r);

// The trigonometric parametrization
//   x_hat(phi) = sin((r+1)phi)^{r+1} / (sin(phi) sin(r phi)^r),
// a decreasing bijection (0, pi/(r+1)) -> (0, c_r).
BigFloat x_of_phi(unsigned r, const BigFloat& phi);
BigFloat phi_of_x(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits = 192);
BigFloat xhat_derivative_abs(unsigned r, const BigFloat& phi);  // |x_hat'(phi)|

struct PhiPoint {
    unsigned r;
    BigFloat phi;
    BigFloat x_hat;
};

// Densities in phi coordinates (phi strictly inside (0, pi/(r+1))).
BigFloat density_w(unsigned r, const BigFloat& phi);
// cross-check form of the same density (explicit trigonometric quotient)
BigFloat density_w_quotient(unsigned r, const BigFloat& phi);
BigFloat density_u(unsigned r, const BigFloat& phi);
BigFloat density_g(unsigned r, const BigFloat& phi);
BigFloat weight_xg(unsigned r, const BigFloat& phi);
// v_r on (0,1): v_r(x) = c_r w_r(c_r x)
BigFloat density_v(unsigned r, const BigFloat& x, mpfr_prec_t bits = 192);

// CDFs on the hat scale.  cdf_w is closed-form (phi is uniform); cdf_u and
// cdf_g integrate in phi with absolute error <= 1e-10 requested as 1e-13.
BigFloat cdf_w(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits = 192);
BigFloat cdf_v(unsigned r, const BigFloat& x, mpfr_prec_t bits = 192);
BigFloat cdf_u(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits = 192);
BigFloat cdf_g(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits = 192);

// Quadrature moment with its exact binomial target:
//   w: binom((r+1)m, m);  u: .../(m+1);  g (and xg via shift): .../(rm+1).
struct MomentResult {
    BigFloat quadrature;
    Rational exact;
    double abs_error;
};
MomentResult moment(DensityKind kind, unsigned r, unsigned m, mpfr_prec_t bits = 192);

// Fuss-Catalan branch data at one point off the support cut [0, c_r]:
// omega solves omega^{r+1} + x - x omega = 0 with omega -> 1 at infinity,
// z_hat = ((r+1) omega - r)/(omega - 1), and omega/x is the Stieltjes
// transform of the Fuss-Catalan law.
struct FCBranch {
    ComplexBF x_hat;
    ComplexBF omega;
    ComplexBF z_hat;
    ComplexBF stieltjes() const { return omega / x_hat; }
};

FCBranch fc_branch(unsigned r, const ComplexBF& x_hat, mpfr_prec_t bits = 128);

// Density of v_r recovered through Stieltjes inversion of the branch at
// x_hat + i*eps; the independent cross-check of the closed form.
BigFloat stieltjes_density_recover_v(unsigned r, const BigFloat& x, mpfr_prec_t bits = 256);

// Mellin-convolution identities: returns {direct density, convolution
// integral} for comparison.
//   u_r(y) = int_y^{c_r} w_r(x) dx/x
//   g_r(y) = (1/r) int_y^{c_r} w_r(x) (y/x)^{1/r - 1} dx/x
std::pair<BigFloat, BigFloat> mellin_check_u(unsigned r, const BigFloat& y,
                                             mpfr_prec_t bits = 192);
std::pair<BigFloat, BigFloat> mellin_check_g(unsigned r, const BigFloat& y,
                                             mpfr_prec_t bits = 192);

enum class Endpoint { Left, Right };

// Log-log regression slope of the density over a window of scaled distances
// [1e-8, 1e-4] from the endpoint.
double endpoint_exponent(DensityKind kind, unsigned r, Endpoint end, mpfr_prec_t bits = 256);

// Solution of x (z - t(r+1)/r)^r = (z - t)^{r+1} with z - x -> 0 at
// infinity, via the scaling reduction z(t xhat / r, t) = t zhat(xhat)/r.
ComplexBF z_of_xt(unsigned r, const ComplexBF& x, const Rational& t, mpfr_prec_t bits = 128);
// Same branch by direct Newton continuation (cross-check path).
ComplexBF z_of_xt_direct(unsigned r, const ComplexBF& x, const Rational& t,
                         mpfr_prec_t bits = 128);

struct DensitySample {
    double phi;
    double x;  // on the kind's own support scale
    double density;
    double cdf;
};

struct DensityCurve {
    DensityKind kind;
    unsigned r;
    double support_right;
    std::vector<DensitySample> samples;
};

// Uniform phi grid of the given size, open at both ends.
DensityCurve make_density_curve(DensityKind kind, unsigned r, size_t grid,
                                mpfr_prec_t bits = 192);

}  // namespace mops
