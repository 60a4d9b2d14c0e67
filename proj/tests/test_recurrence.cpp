#include <doctest.h>

#include "mops/errors.hpp"
#include "mops/families.hpp"
#include "mops/recurrence.hpp"

using namespace mops;

namespace {
Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("jp_nn_coeffs anchors (r=1, alpha=beta=0)") {
    FamilyParams p = FamilyParams::jacobi_pineiro({Rational(0)}, Rational(0));
    NNCoefficients c3 = jp_nn_coeffs(p, MultiIndex({3}));
    CHECK(c3.b[0] == rat(1, 2));
    CHECK(c3.a[0] == rat(9, 140));
    CHECK(jp_nn_coeffs(p, MultiIndex({1})).a[0] == rat(1, 12));
    CHECK(jp_nn_coeffs(p, MultiIndex({0})).a[0] == 0);
    // b_n = 1/2 exactly for n <= 20
    for (unsigned n = 0; n <= 20; ++n) {
        NNCoefficients c = jp_nn_coeffs(p, MultiIndex({n}));
        CHECK(c.b[0] == rat(1, 2));
        if (n > 0)
            CHECK(c.a[0] == rat(static_cast<long>(n) * n,
                                4 * (4 * static_cast<long>(n) * n - 1)));
    }
}

TEST_CASE("ml_nn_coeffs anchors") {
    FamilyParams p = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    CHECK(ml_nn_coeffs(p, MultiIndex({2, 3})).b[0] == rat(25, 3));
    CHECK(ml_nn_coeffs(p, MultiIndex({2, 1})).a[0] == rat(154, 15));
    CHECK(ml_nn_coeffs(p, MultiIndex({0, 4})).a[0] == 0);
}

TEST_CASE("exact recurrence identity for both families, |n| <= 8") {
    FamilyParams jp = FamilyParams::jacobi_pineiro({rat(1, 3), rat(1, 2)}, rat(1, 4));
    FamilyParams ml = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    for (const auto* params : {&jp, &ml}) {
        RecurrenceTable table(*params);
        for (unsigned n1 = 0; n1 <= 8; ++n1) {
            for (unsigned n2 = 0; n1 + n2 <= 8; ++n2) {
                MultiIndex n({n1, n2});
                NNCoefficients c = nn_coeffs(*params, n);
                const ExactPolynomial& pn = table.get(n);
                ExactPolynomial x_pn = ExactPolynomial::linear(Rational(0)) * pn;
                for (size_t k = 0; k < 2; ++k) {
                    ExactPolynomial residue =
                        x_pn - table.get(n.plus(k)) - c.b[k] * pn;
                    for (size_t j = 0; j < 2; ++j)
                        if (n[j] > 0) residue = residue - c.a[j] * table.get(n.minus(j));
                    CHECK(residue.is_zero());
                }
            }
        }
    }
}

TEST_CASE("pole detection in coefficient formulas") {
    // alpha + beta = -1 makes |n|+n_1+alpha+beta-1 vanish at n=(1)
    FamilyParams p = FamilyParams::jacobi_pineiro({rat(-1, 2)}, rat(-1, 2));
    CHECK_THROWS_AS(jp_nn_coeffs(p, MultiIndex({1})), NumericError);
}

TEST_CASE("jp limit coefficients") {
    LimitData l = jp_limit_coeffs({Rational(1)});
    CHECK(l.a[0] == rat(1, 16));
    CHECK(l.b[0] == rat(1, 2));
    CHECK(*l.p == rat(1, 2));
    CHECK(*l.s == rat(3, 2));

    CHECK_THROWS_AS(jp_limit_coeffs({rat(1, 2), rat(1, 2)}), ValidationError);
    CHECK_THROWS_AS(jp_limit_coeffs({rat(1, 3), rat(1, 3), rat(1, 3)}), ValidationError);
    CHECK_THROWS_AS(jp_limit_coeffs({rat(1, 2), rat(1, 3)}), ValidationError);  // sum != 1
}

TEST_CASE("ml limit coefficients") {
    LimitData l1 = ml_limit_coeffs({Rational(1)});
    CHECK(l1.a[0] == 1);
    CHECK(l1.b[0] == 2);

    LimitData l2 = ml_limit_coeffs({rat(1, 3), rat(2, 3)});
    CHECK(l2.b[0] == rat(4, 3));
    CHECK(l2.b[1] == rat(5, 3));
}

TEST_CASE("empirical limit of jp coefficients along the ray q=(1/3,2/3)") {
    FamilyParams p = FamilyParams::jacobi_pineiro({rat(1, 3), rat(1, 2)}, rat(1, 4));
    LimitData lim = jp_limit_coeffs({rat(1, 3), rat(2, 3)});
    auto err_at = [&](unsigned n) {
        MultiIndex idx({n / 3, 2 * n / 3});
        NNCoefficients c = jp_nn_coeffs(p, idx);
        Rational e(0);
        for (size_t j = 0; j < 2; ++j) e += abs(c.a[j] - lim.a[j]) + abs(c.b[j] - lim.b[j]);
        return e;
    };
    // floor-induced oscillation breaks strict halving on {50,100,200,400};
    // the O(1/n) trend shows as err(4n) < err(n)
    CHECK(err_at(200) < err_at(50));
    CHECK(err_at(400) < err_at(100));
    // on exact thirds the decay is cleanly monotone
    Rational prev = err_at(48);
    for (unsigned n : {96u, 192u, 384u}) {
        Rational cur = err_at(n);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("build_surface: residues reproduce the limit a_j") {
    for (const auto& q :
         {std::vector<Rational>{rat(1, 3), rat(2, 3)},
          std::vector<Rational>{rat(1, 6), rat(5, 6)},
          std::vector<Rational>{rat(1, 6), rat(1, 3), rat(1, 2)},
          std::vector<Rational>{rat(1, 10), rat(3, 10), rat(3, 5)}}) {
        for (int family = 0; family < 2; ++family) {
            LimitData lim = family == 0 ? jp_limit_coeffs(q) : ml_limit_coeffs(q);
            LimitSurface s = build_surface(lim);
            CHECK(s.a.degree() <= static_cast<long>(q.size()) - 1);
            CHECK(s.b.degree() == static_cast<long>(q.size()));
            for (size_t j = 0; j < q.size(); ++j) {
                // residue of A/B at b_j is A(b_j)/prod_{i!=j}(b_j - b_i)
                Rational denom(1);
                for (size_t i = 0; i < q.size(); ++i)
                    if (i != j) denom *= lim.b[j] - lim.b[i];
                CHECK(s.a.eval(lim.b[j]) == lim.a[j] * denom);
                CHECK(s.b.eval(lim.b[j]) == 0);
            }
        }
    }
    CHECK_THROWS_AS(build_surface(LimitData{Family::JacobiPineiro,
                                            {rat(1, 2), rat(1, 2)},
                                            {Rational(1), Rational(1)},
                                            {Rational(2), Rational(2)},
                                            std::nullopt,
                                            std::nullopt}),
                    ValidationError);
}

TEST_CASE("JP interpolation values match (p q_j/(1+q_j))^{r+1}") {
    std::vector<Rational> q{rat(1, 3), rat(2, 3)};
    LimitData lim = jp_limit_coeffs(q);
    LimitSurface s = build_surface(lim);
    for (size_t j = 0; j < 2; ++j) {
        Rational target = rational_pow(*lim.p * q[j] / (1 + q[j]), 3);
        CHECK(s.a.eval(lim.b[j]) == target);
    }
}

TEST_CASE("diagonal surface identities") {
    // the assembled equation must reduce exactly to the closed forms:
    // JP: x (z-p)^r = (z - p r/(r+1))^{r+1};  ML: x (z-(r+1)/r)^r = (z-1)^{r+1}.
    // Both sides are linear in x, so exact equality at three x-values proves
    // the two-variable identity.
    for (unsigned r = 1; r <= 5; ++r) {
        for (Family fam : {Family::JacobiPineiro, Family::MultipleLaguerre}) {
            LimitSurface s = diagonal_surface(r, fam);
            Rational p = diagonal_b_root(r, fam);
            Rational c = fam == Family::JacobiPineiro
                             ? p * Rational(static_cast<long>(r)) / Rational(static_cast<long>(r) + 1)
                             : Rational(1);
            CHECK(s.b == ExactPolynomial::shifted_power(p, r));
            ExactPolynomial rhs_pow = ExactPolynomial::shifted_power(c, r + 1);
            for (long xv : {0L, 1L, -2L}) {
                Rational x(xv);
                ExactPolynomial lhs =
                    (ExactPolynomial::linear(Rational(0)) - ExactPolynomial::constant(x)) * s.b +
                    s.a;
                ExactPolynomial rhs = rhs_pow - x * s.b;
                CHECK(lhs == rhs);
            }
        }
    }
    // spot anchors: JP r=1: x(z-1/2) = (z-1/4)^2; ML r=1: x(z-2) = (z-1)^2
    LimitSurface jp1 = diagonal_surface(1, Family::JacobiPineiro);
    CHECK(jp1.b == ExactPolynomial::linear(rat(1, 2)));
    CHECK(jp1.a == ExactPolynomial::constant(rat(1, 16)));
    LimitSurface ml1 = diagonal_surface(1, Family::MultipleLaguerre);
    CHECK(ml1.b == ExactPolynomial::linear(Rational(2)));
    CHECK(ml1.a == ExactPolynomial::constant(Rational(1)));
}

TEST_CASE("solve_z: r=1 quadratic oracle and branch normalization") {
    LimitSurface s = diagonal_surface(1, Family::JacobiPineiro);
    const mpfr_prec_t bits = 192;

    // oracle at x=-1: z = (x + 1/2 - sqrt(x^2 - x))/2 on the z~x branch
    ComplexBF z = solve_z(ComplexBF::from_doubles(-1.0, 0.0, bits), s, bits);
    BigFloat expected =
        (BigFloat::from_double(-0.5, bits) - sqrt(BigFloat::from_long(2, bits))) / 2;
    CHECK(abs(z.re - expected).to_double() < 1e-40);
    CHECK(abs(z.im).to_double() < 1e-40);

    // |z(x) - x| <= 2 a1 / |x| for |x| >= 100
    for (double xv : {-100.0, -1000.0, 1e6}) {
        ComplexBF zz = solve_z(ComplexBF::from_doubles(xv, 0.0, bits), s, bits);
        double diff = std::abs(zz.re.to_double() - xv);
        CHECK(diff <= 2.0 * (1.0 / 16.0) / std::abs(xv));
    }

    // conjugate symmetry
    ComplexBF zp = solve_z(ComplexBF::from_doubles(0.5, 1.0, bits), s, bits);
    ComplexBF zm = solve_z(ComplexBF::from_doubles(0.5, -1.0, bits), s, bits);
    CHECK(abs(zp.re - zm.re).to_double() < 1e-40);
    CHECK(abs(zp.im + zm.im).to_double() < 1e-40);
}

TEST_CASE("solve_z: residual and Stieltjes sign on the upper half-plane (JP r=2 diagonal)") {
    LimitSurface s = diagonal_surface(2, Family::JacobiPineiro);
    const mpfr_prec_t bits = 128;
    Rational p = diagonal_b_root(2, Family::JacobiPineiro);
    int checked = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            double re = -2.0 + 4.5 * i / 9.0;
            double im = 0.05 + 2.0 * j / 9.0;
            ComplexBF x = ComplexBF::from_doubles(re, im, bits);
            ComplexBF z = solve_z(x, s, bits);
            // defining equation residual, relative
            ComplexBF res = (z - x) * s.b.eval_complex(z) + s.a.eval_complex(z);
            CHECK(res.abs().to_double() < 1e-30 * (1.0 + z.abs().to_double()));
            // Im(1/(z - p)) < 0 for Im x > 0
            ComplexBF cauchy =
                ComplexBF{BigFloat::from_long(1, bits), BigFloat(bits)} /
                (z - ComplexBF::real(BigFloat::from_rational(p, bits)));
            CHECK(cauchy.im.sign() < 0);
            ++checked;
        }
    }
    CHECK(checked == 100);
}
