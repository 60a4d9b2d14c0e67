#include "mops/rational.hpp"

#include "mops/errors.hpp"

namespace mops {

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ValidationError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        try {
            Integer n(num, 10), d(den, 10);
            if (d == 0) throw ValidationError("zero denominator: " + text);
            Rational r(n, d);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed rational: " + text);
        }
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ValidationError("malformed rational: " + text);
        try {
            Integer num(digits, 10);
            Integer den(1);
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            Rational r(num, den);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed rational: " + text);
        }
    }
    try {
        return Rational(Integer(s, 10));
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational: " + text);
    }
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ValidationError("0 raised to a negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational r(1), b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational binomial_rational(const Rational& a, unsigned long k) {
    Rational num(1);
    for (unsigned long i = 0; i < k; ++i) num *= (a - Rational(static_cast<long>(i)));
    Rational den(factorial_integer(k));
    return num / den;
}

Integer binomial_integer(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial_integer(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace mops
