#pragma once

#include <optional>
#include <vector>

#include "mops/rational.hpp"

namespace mops {

// Solves A x = b exactly over the rationals.  Rows are scaled to integers,
// then eliminated with Bareiss' fraction-free scheme.  Returns nullopt when
// the system is singular.
std::optional<std::vector<Rational>> solve_linear_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace mops
