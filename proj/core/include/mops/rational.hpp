#pragma once

#include <gmpxx.h>

#include <string>

namespace mops {

// Arbitrary-precision rationals.  mpq_class keeps values canonical: lowest
// terms, positive denominator, 0 stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "p", and decimal strings like "-0.25" (converted exactly).
Rational rational_from_string(const std::string& text);

// Canonical form: "p/q" with q > 1, otherwise just "p".
std::string rational_to_string(const Rational& value);

Rational rational_pow(const Rational& base, long exponent);

// Generalized binomial coefficient with rational upper argument,
// binom(a, k) = a(a-1)...(a-k+1)/k!.
Rational binomial_rational(const Rational& a, unsigned long k);

Integer binomial_integer(unsigned long n, unsigned long k);
Integer factorial_integer(unsigned long n);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace mops
