#pragma once

#include <optional>
#include <vector>

#include "mops/bigfloat.hpp"
#include "mops/families.hpp"
#include "mops/multi_index.hpp"
#include "mops/polynomial.hpp"

namespace mops {

// Nearest-neighbor recurrence coefficients at one multi-index:
//   x P_n = P_{n+e_k} + b[k] P_n + sum_j a[j] P_{n-e_j}.
struct NNCoefficients {
    std::vector<Rational> a;  // a_{n,j}, zero where n_j = 0
    std::vector<Rational> b;  // b_{n,k}
};

NNCoefficients jp_nn_coeffs(const FamilyParams& params, const MultiIndex& n);
NNCoefficients ml_nn_coeffs(const FamilyParams& params, const MultiIndex& n);
NNCoefficients nn_coeffs(const FamilyParams& params, const MultiIndex& n);

// Limits of the recurrence coefficients along the ray n = (q_1 n, ..., q_r n).
struct LimitData {
    Family family = Family::JacobiPineiro;
    std::vector<Rational> q;
    std::vector<Rational> a;       // a_j
    std::vector<Rational> b;       // b_j
    std::optional<Rational> p;     // JP: prod 1/(1+q_k)
    std::optional<Rational> s;     // JP: r+1 - sum 1/(1+q_k)
};

// pre: q_j > 0, sum q_j = 1, entries pairwise distinct.
LimitData jp_limit_coeffs(const std::vector<Rational>& q);
LimitData ml_limit_coeffs(const std::vector<Rational>& q);

// The data of the ratio-asymptotics equation (z - x) B_r(z) + A_{r-1}(z) = 0.
struct LimitSurface {
    ExactPolynomial a;  // degree r-1
    ExactPolynomial b;  // monic, degree r
    Family family = Family::JacobiPineiro;
    bool diagonal = false;
    unsigned r = 1;
};

// Off-diagonal surface: B = prod (z - b_j), A interpolates so that the
// residue of A/B at b_j equals a_j.  pre: b_j pairwise distinct.
LimitSurface build_surface(const LimitData& limits);

// Diagonal (q_j = 1/r) surface from the coalescent Taylor construction.
// JP: the equation reduces to x (z-p)^r = (z - pr/(r+1))^{r+1}, p = (r/(r+1))^r.
// ML: x (z-(r+1)/r)^r = (z-1)^{r+1}.
LimitSurface diagonal_surface(unsigned r, Family family);

// Double root of B on the diagonal (JP: p, ML: (r+1)/r).
Rational diagonal_b_root(unsigned r, Family family);

// The branch of (z - x) B(z) + A(z) = 0 with z(x) - x -> 0 at infinity,
// by Newton continuation from a seed at |x| = 1e6.  pre: x off the support.
ComplexBF solve_z(const ComplexBF& x, const LimitSurface& surface, mpfr_prec_t bits);

}  // namespace mops
