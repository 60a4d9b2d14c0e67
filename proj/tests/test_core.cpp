#include <doctest.h>

#include <random>

#include "mops/errors.hpp"
#include "mops/linsolve.hpp"
#include "mops/moments.hpp"
#include "mops/polynomial.hpp"
#include "mops/rational.hpp"

using namespace mops;

namespace {
Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(rational_from_string("1/3") == Rational(1, 3));
    CHECK(rational_from_string("-2/4") == Rational(-1, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-1.5") == Rational(-3, 2));
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(rational_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("abc"), ValidationError);
}

TEST_CASE("rational arithmetic stays canonical") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
        for (const Rational& v : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
            CHECK(g == 1);
            CHECK(v.get_den() > 0);
        }
    }
}

TEST_CASE("poly_eval_exact anchors") {
    ExactPolynomial p1 = ExactPolynomial::linear(Rational(1, 2));  // x - 1/2
    CHECK(p1.eval(Rational(1, 2)) == 0);

    ExactPolynomial p2({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    CHECK(p2.eval(Rational(2)) == 3);

    // monic shifted Legendre degree 2: x^2 - x + 1/6
    ExactPolynomial leg({Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(leg.eval(Rational(1, 2)) == Rational(-1, 12));
}

TEST_CASE("poly_eval_float reports rigorous enclosures") {
    ExactPolynomial p = ExactPolynomial::linear(Rational(1, 2));
    FloatEval e = poly_eval_float(p, BigFloat::from_double(0.75, 53), 53);
    CHECK(e.sign_determined);
    CHECK(e.sign == 1);
    CHECK(std::abs(e.value.to_double() - 0.25) < 1e-15);
    CHECK(e.error_bound.to_double() < 1e-14);

    // constant at x = 0 comes out exact
    ExactPolynomial q({Rational(3, 7), Rational(4), Rational(9)});
    FloatEval e0 = poly_eval_float(q, BigFloat(64), 64);
    CHECK(std::abs(e0.value.to_double() - 3.0 / 7.0) < 1e-17);

    CHECK_THROWS_AS(poly_eval_float(p, BigFloat::from_double(1.0, 53), 52), ValidationError);
}

TEST_CASE("poly_eval_float indeterminate near a root of a huge-coefficient product") {
    // scaled Wilkinson-style: prod (x - k/10) * 1e40-ish coefficient growth
    ExactPolynomial p = ExactPolynomial::one();
    for (int k = 1; k <= 20; ++k) {
        p = p * ExactPolynomial::linear(Rational(k, 10));
        p = Rational(40) * p;
    }
    p = p.monic();
    // near the root at 3/2 the 53-bit enclosure cannot separate the sign
    BigFloat x = BigFloat::from_double(1.5000000001, 53);
    FloatEval coarse = poly_eval_float(p, x, 53);
    CHECK_FALSE(coarse.sign_determined);
    // escalation resolves it
    BigFloat x_hi = BigFloat::from_double(1.5000000001, 256);
    FloatEval fine = poly_eval_float(p, x_hi, 256);
    CHECK(fine.sign_determined);
}

TEST_CASE("poly_eval_float agrees with exact evaluation on random pairs") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 25), degd(0, 9);
    for (int i = 0; i < 1000; ++i) {
        int d = static_cast<int>(degd(rng));
        std::vector<Rational> c(d + 1);
        for (auto& v : c) v = rat(num(rng), den(rng));
        c.back() = Rational(1);
        ExactPolynomial p(std::move(c));
        Rational x = rat(num(rng), den(rng));
        FloatEval e = poly_eval_float(p, BigFloat::from_rational(x, 96), 96);
        // the float input x_f differs from x; compare against the exact value at x_f
        Rational truth = p.eval(BigFloat::from_rational(x, 96).to_rational());
        Rational diff = abs(e.value.to_rational() - truth);
        CHECK(diff <= e.error_bound.to_rational());
    }
}

TEST_CASE("beta_moment_ratio anchors and telescoping") {
    CHECK(beta_moment_ratio(Rational(0), Rational(0), 0) == 1);
    CHECK(beta_moment_ratio(Rational(0), Rational(0), 1) == Rational(1, 2));
    CHECK(beta_moment_ratio(Rational(1, 3), Rational(0), 2) == Rational(2, 5));
    CHECK_THROWS_AS(beta_moment_ratio(Rational(-1), Rational(0), 1), ValidationError);
    CHECK_THROWS_AS(beta_moment_ratio(Rational(0), Rational(-3, 2), 1), ValidationError);

    // semigroup property over random parameters
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> pick(-2, 8), m_pick(0, 6);
    for (int i = 0; i < 200; ++i) {
        Rational a = rat(pick(rng), 3), beta = rat(pick(rng), 4);
        if (a <= -1 || beta <= -1) continue;
        unsigned long m1 = m_pick(rng), m2 = m_pick(rng);
        CHECK(beta_moment_ratio(a, beta, m1 + m2) ==
              beta_moment_ratio(a, beta, m1) *
                  beta_moment_ratio(a + Rational(static_cast<long>(m1)), beta, m2));
    }
}

TEST_CASE("gamma_moment_ratio anchors and recursion") {
    CHECK(gamma_moment_ratio(Rational(0), 3) == 6);
    CHECK(gamma_moment_ratio(Rational(1, 3), 1) == Rational(4, 3));
    CHECK(gamma_moment_ratio(Rational(5, 7), 0) == 1);
    CHECK_THROWS_AS(gamma_moment_ratio(Rational(-4, 3), 1), ValidationError);

    for (long k = 0; k < 12; ++k) {
        Rational a(2, 3);
        CHECK(gamma_moment_ratio(a, k + 1) ==
              gamma_moment_ratio(a, k) * (a + Rational(k + 1)));
    }
}

TEST_CASE("exact linear solve") {
    // 2x2: x + y/2 = -1/3 ; x/2 + y/3 = -1/4  ->  x = 1/6, y = -1
    auto sol = solve_linear_exact({{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}},
                                  {Rational(-1, 3), Rational(-1, 4)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(1, 6));
    CHECK((*sol)[1] == Rational(-1));

    // singular
    auto bad = solve_linear_exact({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                                  {Rational(1), Rational(2)});
    CHECK_FALSE(bad.has_value());

    // random solvable systems round-trip
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> pick(-9, 9), dpick(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 1 + trial % 6;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        std::vector<Rational> x_true(n);
        for (auto& row : a)
            for (auto& v : row) v = rat(pick(rng), dpick(rng));
        for (auto& v : x_true) v = rat(pick(rng), dpick(rng));
        std::vector<Rational> b(n, Rational(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) b[i] += a[i][j] * x_true[j];
        auto got = solve_linear_exact(a, b);
        if (!got) continue;  // singular random matrix, skip
        for (size_t i = 0; i < n; ++i) CHECK((*got)[i] == x_true[i]);
    }
}

TEST_CASE("certified_sign falls back to exact zero detection") {
    ExactPolynomial p = ExactPolynomial::linear(Rational(1, 2));
    CHECK(certified_sign(p, Rational(1, 2)) == 0);
    CHECK(certified_sign(p, Rational(2, 3)) == 1);
    CHECK(certified_sign(p, Rational(1, 3)) == -1);
}

TEST_CASE("polynomial algebra basics") {
    ExactPolynomial a({Rational(1), Rational(2)});       // 1 + 2x
    ExactPolynomial b({Rational(0), Rational(0), Rational(3)});  // 3x^2
    CHECK((a * b).degree() == 3);
    CHECK((a + b).coeff(2) == 3);
    CHECK((a - a).is_zero());
    CHECK(a.derivative() == ExactPolynomial::constant(Rational(2)));
    CHECK(ExactPolynomial::shifted_power(Rational(1, 4), 2) ==
          ExactPolynomial({Rational(1, 16), Rational(-1, 2), Rational(1)}));
    ExactPolynomial m = Rational(5) * ExactPolynomial({Rational(2), Rational(1)});
    CHECK(m.monic() == ExactPolynomial({Rational(2), Rational(1)}));
}
