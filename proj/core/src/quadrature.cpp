#include "mops/quadrature.hpp"

#include <map>
#include <mutex>

#include "mops/errors.hpp"

namespace mops {

namespace {

std::mutex rule_mutex;
std::map<std::pair<size_t, mpfr_prec_t>, GaussLegendreRule> rule_cache;

// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre_pair(size_t n, const BigFloat& x, BigFloat& p, BigFloat& dp) {
    mpfr_prec_t bits = x.precision();
    BigFloat p0 = BigFloat::from_long(1, bits);
    BigFloat p1 = x;
    for (size_t k = 2; k <= n; ++k) {
        BigFloat pk = ((2 * static_cast<long>(k) - 1) * (x * p1) -
                       (static_cast<long>(k) - 1) * p0) /
                      static_cast<long>(k);
        // reuse as rolling window
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    dp = (static_cast<long>(n) * (x * p1 - p0)) / (x * x - BigFloat::from_long(1, bits));
}

GaussLegendreRule make_rule(size_t n, mpfr_prec_t bits) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    BigFloat pi = BigFloat::pi(bits);
    BigFloat tol = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 6));
    for (size_t i = 0; i < n; ++i) {
        // Chebyshev-like initial guess
        BigFloat theta = pi * (4 * static_cast<long>(i) + 3) / (4 * static_cast<long>(n) + 2);
        BigFloat x = cos(theta);
        BigFloat p(bits), dp(bits);
        for (int it = 0; it < 200; ++it) {
            legendre_pair(n, x, p, dp);
            BigFloat step = p / dp;
            x = x - step;
            if (abs(step) <= tol) break;
        }
        legendre_pair(n, x, p, dp);
        rule.nodes[i] = x;
        BigFloat one = BigFloat::from_long(1, bits);
        rule.weights[i] = 2 * (one / ((one - x * x) * dp * dp));
    }
    return rule;
}

BigFloat panel(const GaussLegendreRule& rule, const std::function<BigFloat(const BigFloat&)>& f,
               const BigFloat& a, const BigFloat& b, mpfr_prec_t bits) {
    BigFloat half = (b - a) / 2;
    BigFloat mid = (a + b) / 2;
    BigFloat acc(bits);
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc = acc + rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

BigFloat integrate_rec(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                       const BigFloat& b, const BigFloat& tol, mpfr_prec_t bits, int depth,
                       const GaussLegendreRule& lo_rule, const GaussLegendreRule& hi_rule) {
    BigFloat coarse = panel(lo_rule, f, a, b, bits);
    BigFloat fine = panel(hi_rule, f, a, b, bits);
    if (abs(fine - coarse) <= tol) return fine;
    if (depth <= 0) throw NumericError("quadrature did not converge");
    BigFloat mid = (a + b) / 2;
    BigFloat half_tol = tol / 2;
    return integrate_rec(f, a, mid, half_tol, bits, depth - 1, lo_rule, hi_rule) +
           integrate_rec(f, mid, b, half_tol, bits, depth - 1, lo_rule, hi_rule);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(size_t n, mpfr_prec_t bits) {
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto key = std::make_pair(n, bits);
    auto it = rule_cache.find(key);
    if (it == rule_cache.end()) it = rule_cache.emplace(key, make_rule(n, bits)).first;
    return it->second;
}

BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                   const BigFloat& b, const BigFloat& abs_tol, mpfr_prec_t bits, int max_depth) {
    const GaussLegendreRule& lo_rule = gauss_legendre(64, bits);
    const GaussLegendreRule& hi_rule = gauss_legendre(96, bits);
    return integrate_rec(f, a, b, abs_tol, bits, max_depth, lo_rule, hi_rule);
}

}  // namespace mops
