#pragma once

#include "mops/rational.hpp"

namespace mops {

// Normalized Jacobi-weight moment on [0,1]:
//   int x^(a+m) (1-x)^beta dx / int x^a (1-x)^beta dx
//     = prod_{i=1..m} (a+i)/(a+beta+1+i).
// pre: a > -1 and beta > -1.
Rational beta_moment_ratio(const Rational& a, const Rational& beta, unsigned long m);

// Normalized Laguerre-weight moment on [0,inf):
//   Gamma(a+m+1)/Gamma(a+1) = prod_{i=1..m} (a+i).
// pre: a > -1.
Rational gamma_moment_ratio(const Rational& a, unsigned long m);

}  // namespace mops
