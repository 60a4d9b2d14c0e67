#pragma once

#include <functional>
#include <vector>

#include "mops/bigfloat.hpp"

namespace mops {

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence at the requested precision.  Rules are cached
// per (n, bits); the cache is guarded by a mutex.
struct GaussLegendreRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

const GaussLegendreRule& gauss_legendre(size_t n, mpfr_prec_t bits);

// Adaptive Gauss-Legendre: accepts a panel when the 64- and 96-node values
// agree within tol, otherwise bisects.  abs_tol is an absolute target for
// the whole interval.
BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                   const BigFloat& b, const BigFloat& abs_tol, mpfr_prec_t bits,
                   int max_depth = 24);

}  // namespace mops
