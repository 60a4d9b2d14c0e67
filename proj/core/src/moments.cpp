#include "mops/moments.hpp"

#include "mops/errors.hpp"

namespace mops {

Rational beta_moment_ratio(const Rational& a, const Rational& beta, unsigned long m) {
    if (a <= -1) throw ValidationError("beta_moment_ratio: a must be > -1");
    if (beta <= -1) throw ValidationError("beta_moment_ratio: beta must be > -1");
    Rational r(1);
    for (unsigned long i = 1; i <= m; ++i) {
        Rational k(static_cast<long>(i));
        r *= (a + k) / (a + beta + 1 + k);
    }
    return r;
}

Rational gamma_moment_ratio(const Rational& a, unsigned long m) {
    if (a <= -1) throw ValidationError("gamma_moment_ratio: a must be > -1");
    Rational r(1);
    for (unsigned long i = 1; i <= m; ++i) r *= a + Rational(static_cast<long>(i));
    return r;
}

}  // namespace mops
