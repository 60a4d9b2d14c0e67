#pragma once

#include <functional>
#include <vector>

#include "mops/bigfloat.hpp"

namespace mops {

// All roots of a monic complex polynomial (ascending coefficients, leading 1
// implicit) by Durand-Kerner iteration.  Warm starts converge in a few steps.
std::vector<ComplexBF> all_roots(const std::vector<ComplexBF>& coeffs, mpfr_prec_t bits,
                                 const std::vector<ComplexBF>* warm = nullptr);

// Tracks one root of a monic polynomial family x -> p_x(z) along the
// waypoint path, guarding each step against branch swaps by requiring the
// tracked root to move much less than its separation from the other roots.
//
// coeff_fn(x) returns the non-leading coefficients of p_x, ascending.
// pick(roots) selects the branch index at the first waypoint.
ComplexBF track_branch(
    const std::function<std::vector<ComplexBF>(const ComplexBF&)>& coeff_fn,
    const std::vector<ComplexBF>& waypoints,
    const std::function<size_t(const std::vector<ComplexBF>&)>& pick, mpfr_prec_t bits);

}  // namespace mops
