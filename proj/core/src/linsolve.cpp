#include "mops/linsolve.hpp"

#include "mops/errors.hpp"

namespace mops {

std::optional<std::vector<Rational>> solve_linear_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t n = a.size();
    if (n == 0) return std::vector<Rational>{};
    for (const auto& row : a)
        if (row.size() != n) throw ValidationError("solve_linear_exact: non-square matrix");
    if (b.size() != n) throw ValidationError("solve_linear_exact: rhs size mismatch");

    // Integerize the augmented matrix row by row (row scaling keeps the
    // solution unchanged), then run fraction-free elimination.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        Integer lcm(1);
        for (size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].get_den_mpz_t());
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (lcm / a[i][j].get_den());
        m[i][n] = b[i].get_num() * (lcm / b[i].get_den());
    }

    Integer prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) std::swap(m[piv], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) return std::nullopt;

    std::vector<Rational> x(n);
    for (size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

}  // namespace mops
