#include <doctest.h>

#include "mops/errors.hpp"
#include "mops/families.hpp"
#include "mops/moments.hpp"
#include "mops/recurrence.hpp"

using namespace mops;

namespace {
Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FamilyParams::jacobi_pineiro({Rational(-2)}, Rational(0)), ValidationError);
    CHECK_THROWS_AS(FamilyParams::jacobi_pineiro({Rational(0)}, Rational(-1)), ValidationError);
    // normality: integer alpha difference
    CHECK_THROWS_AS(FamilyParams::jacobi_pineiro({Rational(0), Rational(1)}, Rational(0)),
                    ValidationError);
    CHECK_THROWS_AS(FamilyParams::multiple_laguerre({rat(1, 3), rat(4, 3)}), ValidationError);
    CHECK_NOTHROW(FamilyParams::jacobi_pineiro({Rational(0), rat(1, 2)}, Rational(0)));
}

TEST_CASE("build_jp anchors") {
    FamilyParams p = FamilyParams::jacobi_pineiro({Rational(0)}, Rational(0));
    CHECK(build_jp(p, MultiIndex({1})) == ExactPolynomial({rat(-1, 2), Rational(1)}));
    CHECK(build_jp(p, MultiIndex({2})) ==
          ExactPolynomial({rat(1, 6), Rational(-1), Rational(1)}));
    CHECK(build_jp(p, MultiIndex({0})) == ExactPolynomial::one());

    FamilyParams p2 = FamilyParams::jacobi_pineiro({rat(1, 3), rat(1, 2)}, rat(1, 4));
    CHECK(build_jp(p2, MultiIndex({0, 0})) == ExactPolynomial::one());
    CHECK(build_jp(p2, MultiIndex({2, 1})).degree() == 3);
}

TEST_CASE("build_ml_explicit anchors") {
    FamilyParams p1 = FamilyParams::multiple_laguerre({rat(1, 3)});
    CHECK(build_ml_explicit(p1, MultiIndex({1})) ==
          ExactPolynomial({rat(-4, 3), Rational(1)}));

    FamilyParams p2 = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    CHECK(build_ml_explicit(p2, MultiIndex({1, 0})) ==
          ExactPolynomial({rat(-4, 3), Rational(1)}));
    CHECK(build_ml_explicit(p2, MultiIndex({0, 0})) == ExactPolynomial::one());
}

TEST_CASE("build_meijer_stepline reduces to monic Laguerre at r=1, nu=0") {
    CHECK(build_meijer_stepline({0}, 1) == ExactPolynomial({Rational(-1), Rational(1)}));
    CHECK(build_meijer_stepline({0}, 2) ==
          ExactPolynomial({Rational(2), Rational(-4), Rational(1)}));
    CHECK(build_meijer_stepline({0, 1}, 0) == ExactPolynomial::one());
    CHECK(build_meijer_stepline({0, 1}, 5).is_monic());
}

TEST_CASE("build_via_recurrence equals direct construction") {
    FamilyParams p = FamilyParams::jacobi_pineiro({Rational(0)}, Rational(0));
    CHECK(build_via_recurrence(p, MultiIndex({2}), {1, 1}) ==
          ExactPolynomial({rat(1, 6), Rational(-1), Rational(1)}));
    CHECK(build_via_recurrence(p, MultiIndex({0}), {}) == ExactPolynomial::one());

    FamilyParams ml = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    ExactPolynomial a = build_via_recurrence(ml, MultiIndex({1, 1}), {1, 2});
    ExactPolynomial b = build_via_recurrence(ml, MultiIndex({1, 1}), {2, 1});
    CHECK(a == b);
    CHECK(a == build_ml_explicit(ml, MultiIndex({1, 1})));

    CHECK_THROWS_AS(build_via_recurrence(ml, MultiIndex({1, 1}), {1, 1}), ValidationError);
}

TEST_CASE("cross-construction equality |n| <= 8, both families, two paths") {
    FamilyParams jp = FamilyParams::jacobi_pineiro({rat(1, 3), rat(1, 2)}, rat(1, 4));
    FamilyParams ml = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    for (unsigned n1 = 0; n1 <= 8; ++n1) {
        for (unsigned n2 = 0; n1 + n2 <= 8; ++n2) {
            MultiIndex n({n1, n2});
            std::vector<unsigned> forward = canonical_path(n);
            std::vector<unsigned> reversed(forward.rbegin(), forward.rend());
            for (const auto* params : {&jp, &ml}) {
                ExactPolynomial direct = build_direct(*params, n);
                CHECK(build_via_recurrence(*params, n, forward) == direct);
                CHECK(build_via_recurrence(*params, n, reversed) == direct);
            }
        }
    }
}

TEST_CASE("orthogonality_check: exact pass/fail with witness") {
    FamilyParams p = FamilyParams::jacobi_pineiro({Rational(0)}, Rational(0));
    ExactPolynomial leg2 = build_jp(p, MultiIndex({2}));
    CHECK(orthogonality_check(p, leg2, MultiIndex({2})).ok);

    // x - 1/3 fails against n=(1) with witness 1/6
    OrthogonalityResult bad =
        orthogonality_check(p, ExactPolynomial::linear(rat(1, 3)), MultiIndex({1}));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == rat(1, 6));

    // degree-0 has no conditions
    CHECK(orthogonality_check(p, ExactPolynomial::one(), MultiIndex({0})).ok);
}

TEST_CASE("orthogonality holds exactly for built polynomials, |n| <= 6") {
    FamilyParams jp = FamilyParams::jacobi_pineiro({rat(1, 3), rat(1, 2)}, rat(1, 4));
    FamilyParams ml = FamilyParams::multiple_laguerre({rat(1, 3), rat(1, 2)});
    for (unsigned n1 = 0; n1 <= 6; ++n1) {
        for (unsigned n2 = 0; n1 + n2 <= 6; ++n2) {
            MultiIndex n({n1, n2});
            CHECK(orthogonality_check(jp, build_jp(jp, n), n).ok);
            CHECK(orthogonality_check(ml, build_ml_explicit(ml, n), n).ok);
        }
    }
}

TEST_CASE("JP r=1 with alpha=beta is symmetric about 1/2") {
    FamilyParams p = FamilyParams::jacobi_pineiro({rat(1, 3)}, rat(1, 3));
    for (unsigned deg : {1u, 2u, 3u, 4u, 5u}) {
        ExactPolynomial q = build_jp(p, MultiIndex({deg}));
        // q(x) = (-1)^deg q(1-x), checked at rational probes
        for (long num = -3; num <= 3; ++num) {
            Rational x = rat(num, 7);
            Rational lhs = q.eval(x);
            Rational rhs = q.eval(1 - x);
            if (deg % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("JP r=1 alpha=beta=0 equals monic shifted Legendre (three-term oracle)") {
    FamilyParams p = FamilyParams::jacobi_pineiro({Rational(0)}, Rational(0));
    // oracle: p_{n+1} = (x - 1/2) p_n - a_n p_{n-1}, a_n = n^2/(4(4n^2-1))
    ExactPolynomial prev = ExactPolynomial::one();
    ExactPolynomial cur = ExactPolynomial::linear(rat(1, 2));
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(build_jp(p, MultiIndex({n})) == cur);
        Rational a = rat(static_cast<long>(n) * n, 4 * (4 * static_cast<long>(n) * n - 1));
        ExactPolynomial next = ExactPolynomial::linear(rat(1, 2)) * cur - a * prev;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("ML r=1 and MeijerG nu=(0) equal monic Laguerre (classical oracle)") {
    FamilyParams p = FamilyParams::multiple_laguerre({Rational(0)});
    // monic Laguerre: p_{n+1} = (x - (2n+1)) p_n - n^2 p_{n-1}
    ExactPolynomial prev = ExactPolynomial::one();
    ExactPolynomial cur = ExactPolynomial::linear(Rational(1));
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(build_ml_explicit(p, MultiIndex({n})) == cur);
        CHECK(build_meijer_stepline({0}, n) == cur);
        ExactPolynomial next =
            ExactPolynomial::linear(Rational(2 * static_cast<long>(n) + 1)) * cur -
            Rational(static_cast<long>(n) * static_cast<long>(n)) * prev;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("meijer-g rejects operations without a kernel") {
    FamilyParams mg = FamilyParams::meijer_g({0, 1});
    CHECK_THROWS_AS(orthogonality_check(mg, ExactPolynomial::one(), MultiIndex({0, 0})),
                    ValidationError);
    CHECK_THROWS_AS(build_via_recurrence(mg, MultiIndex({0, 0}), {}), ValidationError);
}
