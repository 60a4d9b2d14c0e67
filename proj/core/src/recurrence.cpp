#include "mops/recurrence.hpp"

#include "mops/errors.hpp"

namespace mops {

namespace {

Rational rat(long v) { return Rational(v); }

void check_nonzero(const Rational& d) {
    if (d == 0) throw NumericError("pole in coefficient formula");
}

}  // namespace

NNCoefficients jp_nn_coeffs(const FamilyParams& params, const MultiIndex& n) {
    params.validate();
    if (params.family != Family::JacobiPineiro) throw ValidationError("jp_nn_coeffs: family mismatch");
    if (n.r() != params.r) throw ValidationError("multi-index length != r");
    const size_t r = params.r;
    const Rational beta = params.beta;
    const Rational N = rat(static_cast<long>(n.size()));

    NNCoefficients out;
    out.a.resize(r);
    out.b.resize(r);

    for (size_t j = 0; j < r; ++j) {
        if (n[j] == 0) {
            out.a[j] = 0;
            continue;
        }
        const Rational nj = rat(n[j]);
        const Rational aj = params.alpha[j];
        Rational v = nj * (nj + aj) * (N + beta);
        Rational d1 = N + nj + aj + beta + 1;
        Rational d2 = N + nj + aj + beta;
        Rational d3 = N + nj + aj + beta - 1;
        check_nonzero(d1);
        check_nonzero(d2);
        check_nonzero(d3);
        v /= d1 * d2 * d3;
        for (size_t i = 0; i < r; ++i) {
            // factor pairs with n_i = 0 cancel to 1 exactly
            if (n[i] == 0) continue;
            Rational den = N + rat(n[i]) + params.alpha[i] + beta;
            check_nonzero(den);
            v *= (N + params.alpha[i] + beta) / den;
        }
        for (size_t i = 0; i < r; ++i) {
            if (i == j) continue;
            Rational den = nj - rat(n[i]) + aj - params.alpha[i];
            check_nonzero(den);
            v *= (nj + aj - params.alpha[i]) / den;
        }
        out.a[j] = v;
    }

    for (size_t k = 0; k < r; ++k) {
        Rational t1 = (N + beta + 1) * (N + beta + params.alpha[k] + 1);
        Rational d = N + rat(n[k]) + beta + params.alpha[k] + 2;
        check_nonzero(d);
        t1 /= d;
        for (size_t j = 0; j < r; ++j) {
            if (j == k || n[j] == 0) continue;
            Rational den = N + rat(n[j]) + beta + params.alpha[j] + 1;
            check_nonzero(den);
            t1 *= (N + beta + params.alpha[j] + 1) / den;
        }
        Rational t2 = N + beta;
        for (size_t j = 0; j < r; ++j) {
            if (n[j] == 0) continue;
            Rational den = N + rat(n[j]) + beta + params.alpha[j];
            check_nonzero(den);
            t2 *= (N + beta + params.alpha[j]) / den;
        }
        out.b[k] = t1 - t2;
    }
    return out;
}

NNCoefficients ml_nn_coeffs(const FamilyParams& params, const MultiIndex& n) {
    params.validate();
    if (params.family != Family::MultipleLaguerre)
        throw ValidationError("ml_nn_coeffs: family mismatch");
    if (n.r() != params.r) throw ValidationError("multi-index length != r");
    const size_t r = params.r;
    const Rational N = rat(static_cast<long>(n.size()));

    NNCoefficients out;
    out.a.resize(r);
    out.b.resize(r);
    for (size_t j = 0; j < r; ++j) {
        if (n[j] == 0) {
            out.a[j] = 0;
            continue;
        }
        const Rational nj = rat(n[j]);
        const Rational aj = params.alpha[j];
        Rational v = nj * (nj + aj);
        for (size_t i = 0; i < r; ++i) {
            if (i == j) continue;
            Rational den = nj - rat(n[i]) + aj - params.alpha[i];
            check_nonzero(den);
            v *= (nj + aj - params.alpha[i]) / den;
        }
        out.a[j] = v;
    }
    for (size_t k = 0; k < r; ++k) out.b[k] = N + rat(n[k]) + params.alpha[k] + 1;
    return out;
}

NNCoefficients nn_coeffs(const FamilyParams& params, const MultiIndex& n) {
    if (params.family == Family::JacobiPineiro) return jp_nn_coeffs(params, n);
    if (params.family == Family::MultipleLaguerre) return ml_nn_coeffs(params, n);
    throw ValidationError("nn_coeffs: no recurrence coefficients for meijer-g");
}

namespace {

void validate_ray(const std::vector<Rational>& q) {
    if (q.empty()) throw ValidationError("ray must have length >= 1");
    Rational sum(0);
    for (const auto& qj : q) {
        if (qj <= 0) throw ValidationError("ray entries must be positive");
        sum += qj;
    }
    if (sum != 1) throw ValidationError("ray entries must sum to 1");
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 1; j < q.size(); ++j)
            if (q[i] == q[j])
                throw ValidationError("repeated ray entries: use diagonal_surface instead");
}

}  // namespace

LimitData jp_limit_coeffs(const std::vector<Rational>& q) {
    validate_ray(q);
    const size_t r = q.size();
    LimitData out;
    out.family = Family::JacobiPineiro;
    out.q = q;
    Rational p(1), s(static_cast<long>(r + 1));
    for (const auto& qk : q) {
        p /= (1 + qk);
        s -= 1 / (1 + qk);
    }
    out.p = p;
    out.s = s;
    out.a.resize(r);
    out.b.resize(r);
    for (size_t j = 0; j < r; ++j) {
        Rational aj = p * rational_pow(q[j], static_cast<long>(r + 1)) / rational_pow(1 + q[j], 3);
        for (size_t i = 0; i < r; ++i)
            if (i != j) aj /= (q[j] - q[i]);
        out.a[j] = aj;
        out.b[j] = p * (s - 1 / (1 + q[j]));
    }
    return out;
}

LimitData ml_limit_coeffs(const std::vector<Rational>& q) {
    validate_ray(q);
    const size_t r = q.size();
    LimitData out;
    out.family = Family::MultipleLaguerre;
    out.q = q;
    out.a.resize(r);
    out.b.resize(r);
    for (size_t j = 0; j < r; ++j) {
        Rational aj = rational_pow(q[j], static_cast<long>(r + 1));
        for (size_t i = 0; i < r; ++i)
            if (i != j) aj /= (q[j] - q[i]);
        out.a[j] = aj;
        out.b[j] = 1 + q[j];
    }
    return out;
}

LimitSurface build_surface(const LimitData& limits) {
    const size_t r = limits.b.size();
    if (r == 0) throw ValidationError("build_surface: empty limit data");
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (limits.b[i] == limits.b[j])
                throw ValidationError("coincident b_j: use diagonal_surface instead");

    LimitSurface out;
    out.family = limits.family;
    out.diagonal = false;
    out.r = static_cast<unsigned>(r);

    ExactPolynomial big = ExactPolynomial::one();
    for (size_t j = 0; j < r; ++j) big = big * ExactPolynomial::linear(limits.b[j]);
    out.b = big;

    // Lagrange interpolation of A through A(b_j) = a_j * prod_{i != j} (b_j - b_i),
    // which is exactly the residue condition A(b_j)/B'(b_j) = a_j.
    ExactPolynomial a = ExactPolynomial::zero();
    for (size_t j = 0; j < r; ++j) {
        Rational value = limits.a[j];
        ExactPolynomial basis = ExactPolynomial::one();
        for (size_t i = 0; i < r; ++i)
            if (i != j) basis = basis * ExactPolynomial::linear(limits.b[i]);
        // value * prod(b_j - b_i) / prod(b_j - b_i) = value; basis(b_j) = prod(b_j-b_i)
        a = a + (value * basis);
    }
    out.a = a;
    return out;
}

Rational diagonal_b_root(unsigned r, Family family) {
    if (family == Family::JacobiPineiro)
        return rational_pow(Rational(static_cast<long>(r)) / rat(r + 1), r);
    if (family == Family::MultipleLaguerre)
        return Rational(static_cast<long>(r + 1)) / rat(static_cast<long>(r));
    throw ValidationError("diagonal_b_root: no surface for meijer-g");
}

LimitSurface diagonal_surface(unsigned r, Family family) {
    if (r == 0) throw ValidationError("r must be >= 1");
    LimitSurface out;
    out.family = family;
    out.diagonal = true;
    out.r = r;

    if (family == Family::JacobiPineiro) {
        // p = (r/(r+1))^r, s = (2r+1)/(r+1); A is the Taylor polynomial of
        // degree r-1 of (z + p(1-s))^{r+1} around p.
        Rational p = diagonal_b_root(r, family);
        Rational s = rat(2 * static_cast<long>(r) + 1) / rat(static_cast<long>(r) + 1);
        ExactPolynomial f = ExactPolynomial::shifted_power(-p * (1 - s), r + 1);
        ExactPolynomial zp_r = ExactPolynomial::shifted_power(p, r);
        ExactPolynomial zp_r1 = zp_r * ExactPolynomial::linear(p);
        Rational c = rat(static_cast<long>(r) + 1) * p * (2 - s);
        out.a = f - zp_r1 - c * zp_r;
        out.b = zp_r;
    } else if (family == Family::MultipleLaguerre) {
        // A is the Taylor polynomial of degree r-1 of (z-1)^{r+1} around (r+1)/r.
        Rational p = diagonal_b_root(r, family);
        ExactPolynomial f = ExactPolynomial::shifted_power(Rational(1), r + 1);
        ExactPolynomial zp_r = ExactPolynomial::shifted_power(p, r);
        ExactPolynomial zp_r1 = zp_r * ExactPolynomial::linear(p);
        // f^{(r)}(p)/r! = (r+1)(p-1) = (r+1)/r
        Rational c = rat(static_cast<long>(r) + 1) * (p - 1);
        out.a = f - zp_r1 - c * zp_r;
        out.b = zp_r;
    } else {
        throw ValidationError("diagonal_surface: no surface for meijer-g");
    }
    return out;
}

namespace {

ComplexBF surface_eval(const LimitSurface& s, const ComplexBF& x, const ComplexBF& z) {
    return (z - x) * s.b.eval_complex(z) + s.a.eval_complex(z);
}

ComplexBF surface_eval_dz(const LimitSurface& s, const ComplexBF& x, const ComplexBF& z) {
    // d/dz [(z-x)B + A] = B + (z-x)B' + A'
    return s.b.eval_complex(z) + (z - x) * s.b.derivative().eval_complex(z) +
           s.a.derivative().eval_complex(z);
}

}  // namespace

// Newton iteration to the root of (z-x)B+A near the seed; tolerance relative
// to |z|.  Returns nullopt when it does not settle.
static std::optional<ComplexBF> newton_z(const LimitSurface& s, const ComplexBF& x, ComplexBF z,
                                         mpfr_prec_t bits, int max_iter) {
    BigFloat tol = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 8));
    for (int it = 0; it < max_iter; ++it) {
        ComplexBF f = surface_eval(s, x, z);
        ComplexBF df = surface_eval_dz(s, x, z);
        if (df.abs().sign() == 0) return std::nullopt;
        ComplexBF step = f / df;
        z = z - step;
        BigFloat scale = z.abs() + BigFloat::from_long(1, bits);
        if (step.abs() <= tol * scale) return z;
    }
    return std::nullopt;
}

ComplexBF solve_z(const ComplexBF& x, const LimitSurface& surface, mpfr_prec_t bits) {
    // Waypoints: seed far out on the imaginary side of the target, come down
    // to the target's scale, then move to the target.  The support lies on
    // the positive real axis, so every segment stays clear of it.
    ComplexBF x_target{BigFloat(bits), BigFloat(bits)};
    mpfr_set(x_target.re.raw(), x.re.raw(), MPFR_RNDN);
    mpfr_set(x_target.im.raw(), x.im.raw(), MPFR_RNDN);

    int dir = x_target.im.sign() >= 0 ? 1 : -1;
    BigFloat big = BigFloat::from_long(1000000, bits);
    BigFloat mid_scale = x_target.abs() + BigFloat::from_long(1, bits);
    ComplexBF w0{BigFloat(bits), dir * big};
    ComplexBF w1{BigFloat(bits), dir * mid_scale};

    // series seed z = x - A(x)/B(x) at the far waypoint
    ComplexBF z = w0 - surface.a.eval_complex(w0) / surface.b.eval_complex(w0);
    auto zn = newton_z(surface, w0, z, bits, 80);
    if (!zn) throw NumericError("continuation failed at seed");
    z = *zn;

    const ComplexBF waypoints[2] = {w1, x_target};
    ComplexBF from = w0;
    for (const ComplexBF& to : waypoints) {
        BigFloat t(bits);  // progress along [from, to]
        BigFloat one = BigFloat::from_long(1, bits);
        BigFloat dt = BigFloat::from_rational(Rational(1, 4), bits);
        BigFloat min_dt = pow_int(BigFloat::from_long(2, bits), -24);
        while (t < one) {
            BigFloat tn = t + dt;
            if (tn > one) tn = one;
            ComplexBF xt = from + ComplexBF{tn, BigFloat(bits)} * (to - from);
            auto step = newton_z(surface, xt, z, bits, 60);
            if (step) {
                z = *step;
                t = tn;
                dt = dt + dt;
            } else {
                dt = dt / 2;
                if (dt < min_dt) throw NumericError("continuation failed");
            }
        }
        from = to;
    }
    return z;
}

}  // namespace mops
