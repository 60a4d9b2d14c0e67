#include "mops/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "mops/errors.hpp"
#include "mops/quadrature.hpp"

namespace mops {

const char* density_kind_name(DensityKind k) {
    switch (k) {
        case DensityKind::w: return "w";
        case DensityKind::v: return "v";
        case DensityKind::u: return "u";
        case DensityKind::g: return "g";
        case DensityKind::xg: return "xg";
    }
    return "?";
}

DensityKind density_kind_from_name(const std::string& name) {
    if (name == "w") return DensityKind::w;
    if (name == "v") return DensityKind::v;
    if (name == "u") return DensityKind::u;
    if (name == "g") return DensityKind::g;
    if (name == "xg") return DensityKind::xg;
    throw ValidationError("unknown density kind: " + name);
}

Rational support_endpoint(unsigned r) {
    return rational_pow(Rational(static_cast<long>(r) + 1), static_cast<long>(r) + 1) /
           rational_pow(Rational(static_cast<long>(r)), static_cast<long>(r));
}

namespace {

struct Trig {
    BigFloat s1, sr, sr1, c1;  // sin(phi), sin(r phi), sin((r+1) phi), cos(phi)
};

Trig trig_at(unsigned r, const BigFloat& phi) {
    return {sin(phi), sin(static_cast<long>(r) * phi), sin((static_cast<long>(r) + 1) * phi),
            cos(phi)};
}

void check_phi_range(unsigned r, const BigFloat& phi) {
    mpfr_prec_t bits = phi.precision();
    BigFloat upper = BigFloat::pi(bits) / (static_cast<long>(r) + 1);
    if (!(phi.sign() > 0) || !(phi < upper))
        throw ValidationError("phi outside (0, pi/(r+1))");
}

}  // namespace

BigFloat x_of_phi(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    Trig t = trig_at(r, phi);
    return pow_int(t.sr1, static_cast<long>(r) + 1) / (t.s1 * pow_int(t.sr, r));
}

BigFloat phi_of_x(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits) {
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    if (!(x_hat.sign() > 0) || !(x_hat < cr))
        throw ValidationError("x_hat outside (0, c_r)");
    // monotone bisection; the map is decreasing in phi
    BigFloat x(bits);
    mpfr_set(x.raw(), x_hat.raw(), MPFR_RNDN);
    BigFloat lo(bits), hi = BigFloat::pi(bits) / (static_cast<long>(r) + 1);
    BigFloat eps = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) / 2));
    BigFloat lo_in = hi * eps, hi_in = hi * (BigFloat::from_long(1, bits) - eps);
    lo = lo_in;
    hi = hi_in;
    for (long it = 0; it < static_cast<long>(bits) + 8; ++it) {
        BigFloat mid = (lo + hi) / 2;
        if (x_of_phi(r, mid) > x)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

BigFloat xhat_derivative_abs(unsigned r, const BigFloat& phi) {
    // |x'| = x/(s1 sr sr1) * ((r+1)^2 sr^2 - 2r(r+1) sr1 sr c1 + r^2 sr1^2)
    Trig t = trig_at(r, phi);
    BigFloat x = x_of_phi(r, phi);
    long rl = static_cast<long>(r);
    BigFloat d = (rl + 1) * (rl + 1) * (t.sr * t.sr) -
                 2 * rl * (rl + 1) * (t.sr1 * t.sr * t.c1) + rl * rl * (t.sr1 * t.sr1);
    return x / (t.s1 * t.sr * t.sr1) * d;
}

BigFloat density_w(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    mpfr_prec_t bits = phi.precision();
    return (static_cast<long>(r) + 1) * (BigFloat::from_long(1, bits) /
                                         (BigFloat::pi(bits) * xhat_derivative_abs(r, phi)));
}

BigFloat density_w_quotient(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    mpfr_prec_t bits = phi.precision();
    Trig t = trig_at(r, phi);
    BigFloat x = x_of_phi(r, phi);
    long rl = static_cast<long>(r);
    BigFloat d = (rl + 1) * (rl + 1) * (t.sr * t.sr) -
                 2 * rl * (rl + 1) * (t.sr1 * t.sr * t.c1) + rl * rl * (t.sr1 * t.sr1);
    return (rl + 1) * (t.s1 * t.sr * t.sr1) / (BigFloat::pi(bits) * x * d);
}

BigFloat density_u(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    mpfr_prec_t bits = phi.precision();
    Trig t = trig_at(r, phi);
    return pow_int(t.sr, static_cast<long>(r) + 1) /
           (static_cast<long>(r) * BigFloat::pi(bits) * pow_int(t.sr1, r));
}

BigFloat density_g(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    mpfr_prec_t bits = phi.precision();
    Trig t = trig_at(r, phi);
    return t.s1 * t.s1 * pow_int(t.sr, static_cast<long>(r) - 1) /
           (BigFloat::pi(bits) * pow_int(t.sr1, r));
}

BigFloat weight_xg(unsigned r, const BigFloat& phi) {
    check_phi_range(r, phi);
    mpfr_prec_t bits = phi.precision();
    Trig t = trig_at(r, phi);
    return t.s1 * t.sr1 / (BigFloat::pi(bits) * t.sr);
}

BigFloat density_v(unsigned r, const BigFloat& x, mpfr_prec_t bits) {
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    BigFloat xh = cr * x;
    BigFloat phi = phi_of_x(r, xh, bits);
    return cr * density_w(r, phi);
}

BigFloat cdf_w(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits) {
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    if (x_hat.sign() <= 0) return BigFloat(bits);
    if (!(x_hat < cr)) return BigFloat::from_long(1, bits);
    BigFloat phi = phi_of_x(r, x_hat, bits);
    return BigFloat::from_long(1, bits) - (static_cast<long>(r) + 1) * phi / BigFloat::pi(bits);
}

BigFloat cdf_v(unsigned r, const BigFloat& x, mpfr_prec_t bits) {
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    return cdf_w(r, cr * x, bits);
}

namespace {

// integral over [phi(x_hat), pi/(r+1)) of dens(psi) |x'(psi)| dpsi
BigFloat cdf_by_phi_quadrature(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits,
                               const std::function<BigFloat(unsigned, const BigFloat&)>& dens) {
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    if (x_hat.sign() <= 0) return BigFloat(bits);
    if (!(x_hat < cr)) return BigFloat::from_long(1, bits);
    BigFloat phi = phi_of_x(r, x_hat, bits);
    BigFloat upper = BigFloat::pi(bits) / (static_cast<long>(r) + 1);
    // keep strictly inside the domain; the integrand extends continuously
    BigFloat margin = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 4));
    BigFloat tol = BigFloat::from_double(1e-13, bits);
    auto f = [&](const BigFloat& psi) { return dens(r, psi) * xhat_derivative_abs(r, psi); };
    return integrate(f, phi, upper - margin, tol, bits);
}

}  // namespace

BigFloat cdf_u(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits) {
    return cdf_by_phi_quadrature(r, x_hat, bits, density_u);
}

BigFloat cdf_g(unsigned r, const BigFloat& x_hat, mpfr_prec_t bits) {
    return cdf_by_phi_quadrature(r, x_hat, bits, density_g);
}

MomentResult moment(DensityKind kind, unsigned r, unsigned m, mpfr_prec_t bits) {
    if (m > 12) throw ValidationError("moment: m must be <= 12");
    const long rl = static_cast<long>(r);
    Rational exact;
    switch (kind) {
        case DensityKind::w:
            exact = Rational(binomial_integer((r + 1) * m, m));
            break;
        case DensityKind::u:
            exact = Rational(binomial_integer((r + 1) * m, m)) / Rational(m + 1);
            break;
        case DensityKind::g:
            exact = Rational(binomial_integer((r + 1) * m, m)) / Rational(r * m + 1);
            break;
        case DensityKind::xg:
            // int x^m (x g_r) dx is the (m+1)-st Fuss-Catalan moment
            exact = Rational(binomial_integer((r + 1) * (m + 1), m + 1)) /
                    Rational(r * (m + 1) + 1);
            break;
        case DensityKind::v:
            exact = Rational(binomial_integer((r + 1) * m, m)) /
                    rational_pow(support_endpoint(r), m);
            break;
    }

    BigFloat upper = BigFloat::pi(bits) / (rl + 1);
    BigFloat margin = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 4));
    BigFloat tol = BigFloat::from_double(1e-20, bits);
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);

    auto f = [&](const BigFloat& phi) -> BigFloat {
        BigFloat x = x_of_phi(r, phi);
        BigFloat xm = pow_int(x, m);
        switch (kind) {
            case DensityKind::w:
                // w |x'| = (r+1)/pi: the phi-uniform law
                return xm * (rl + 1) / BigFloat::pi(bits);
            case DensityKind::v:
                return pow_int(x / cr, m) * (rl + 1) / BigFloat::pi(bits);
            case DensityKind::u:
                return xm * density_u(r, phi) * xhat_derivative_abs(r, phi);
            case DensityKind::g:
                return xm * density_g(r, phi) * xhat_derivative_abs(r, phi);
            case DensityKind::xg:
                return xm * x * density_g(r, phi) * xhat_derivative_abs(r, phi);
        }
        return BigFloat(bits);
    };
    BigFloat q = integrate(f, margin, upper - margin, tol, bits);
    BigFloat err = abs(q - BigFloat::from_rational(exact, bits));
    return {q, exact, err.to_double()};
}

namespace {

ComplexBF fc_eval(unsigned r, const ComplexBF& x, const ComplexBF& w) {
    // omega^{r+1} + x(1 - omega)
    mpfr_prec_t bits = w.re.precision();
    ComplexBF one{BigFloat::from_long(1, bits), BigFloat(bits)};
    return pow_int(w, static_cast<long>(r) + 1) + x * (one - w);
}

ComplexBF fc_eval_dw(unsigned r, const ComplexBF& x, const ComplexBF& w) {
    mpfr_prec_t bits = w.re.precision();
    ComplexBF rp1{BigFloat::from_long(static_cast<long>(r) + 1, bits), BigFloat(bits)};
    return rp1 * pow_int(w, r) - x;
}

// Newton with a generous iteration cap: at the support endpoint the root
// degenerates to a double root and convergence is only linear.
std::optional<ComplexBF> newton_fc(unsigned r, const ComplexBF& x, ComplexBF w, mpfr_prec_t bits,
                                   int max_iter) {
    BigFloat tol = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 8));
    for (int it = 0; it < max_iter; ++it) {
        ComplexBF f = fc_eval(r, x, w);
        ComplexBF df = fc_eval_dw(r, x, w);
        if (df.abs().sign() == 0) return std::nullopt;
        ComplexBF step = f / df;
        w = w - step;
        if (step.abs() <= tol * (w.abs() + BigFloat::from_long(1, bits))) return w;
    }
    return std::nullopt;
}

}  // namespace

FCBranch fc_branch(unsigned r, const ComplexBF& x_hat, mpfr_prec_t bits) {
    ComplexBF x{BigFloat(bits), BigFloat(bits)};
    mpfr_set(x.re.raw(), x_hat.re.raw(), MPFR_RNDN);
    mpfr_set(x.im.raw(), x_hat.im.raw(), MPFR_RNDN);

    ComplexBF one{BigFloat::from_long(1, bits), BigFloat(bits)};
    int dir = x.im.sign() >= 0 ? 1 : -1;
    BigFloat big = BigFloat::from_long(1000000, bits);
    BigFloat mid_scale = x.abs() + BigFloat::from_long(1, bits);
    ComplexBF w0{BigFloat(bits), dir * big};
    ComplexBF w1{BigFloat(bits), dir * mid_scale};

    ComplexBF w = one + one / w0;  // series seed, omega -> 1 at infinity
    auto wn = newton_fc(r, w0, w, bits, 200);
    if (!wn) throw NumericError("continuation failed at seed");
    w = *wn;

    const ComplexBF waypoints[2] = {w1, x};
    ComplexBF from = w0;
    for (const ComplexBF& to : waypoints) {
        BigFloat t(bits);
        BigFloat one_f = BigFloat::from_long(1, bits);
        BigFloat dt = BigFloat::from_rational(Rational(1, 4), bits);
        BigFloat min_dt = pow_int(BigFloat::from_long(2, bits), -26);
        while (t < one_f) {
            BigFloat tn = t + dt;
            if (tn > one_f) tn = one_f;
            ComplexBF xt = from + ComplexBF{tn, BigFloat(bits)} * (to - from);
            auto step = newton_fc(r, xt, w, bits, 700);
            if (step) {
                w = *step;
                t = tn;
                dt = dt + dt;
            } else {
                dt = dt / 2;
                if (dt < min_dt) throw NumericError("continuation failed");
            }
        }
        from = to;
    }

    FCBranch out;
    out.x_hat = x;
    out.omega = w;
    // z_hat = ((r+1) omega - r) / (omega - 1)
    ComplexBF rp1{BigFloat::from_long(static_cast<long>(r) + 1, bits), BigFloat(bits)};
    ComplexBF rr{BigFloat::from_long(static_cast<long>(r), bits), BigFloat(bits)};
    out.z_hat = (rp1 * w - rr) / (w - one);
    return out;
}

BigFloat stieltjes_density_recover_v(unsigned r, const BigFloat& x, mpfr_prec_t bits) {
    // S_v(x) = (c_r / x_hat) omega / ((r+1) - r omega) evaluated just above
    // the cut; v = -Im S / pi.
    BigFloat cr = BigFloat::from_rational(support_endpoint(r), bits);
    BigFloat xh = cr * x;
    BigFloat eps = BigFloat::from_double(1e-12, bits) * (xh + BigFloat::from_long(1, bits));
    ComplexBF at{xh, eps};
    FCBranch br = fc_branch(r, at, bits);
    ComplexBF rp1{BigFloat::from_long(static_cast<long>(r) + 1, bits), BigFloat(bits)};
    ComplexBF rr{BigFloat::from_long(static_cast<long>(r), bits), BigFloat(bits)};
    ComplexBF s = ComplexBF::real(cr) / at * (br.omega / (rp1 - rr * br.omega));
    return -s.im / BigFloat::pi(bits);
}

std::pair<BigFloat, BigFloat> mellin_check_u(unsigned r, const BigFloat& y, mpfr_prec_t bits) {
    // direct: u_r(y); convolution: (r+1)/pi int_0^{phi(y)} dpsi / x(psi)
    BigFloat phi_y = phi_of_x(r, y, bits);
    BigFloat direct = density_u(r, phi_y);
    BigFloat margin = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 4));
    BigFloat tol = BigFloat::from_double(1e-14, bits);
    auto f = [&](const BigFloat& psi) {
        return BigFloat::from_long(1, bits) / x_of_phi(r, psi);
    };
    BigFloat conv =
        (static_cast<long>(r) + 1) * integrate(f, margin, phi_y, tol, bits) / BigFloat::pi(bits);
    return {direct, conv};
}

std::pair<BigFloat, BigFloat> mellin_check_g(unsigned r, const BigFloat& y, mpfr_prec_t bits) {
    // direct: g_r(y); convolution with the beta(1/r, 1) kernel:
    // y^{1/r-1} (r+1)/(r pi) int_0^{phi(y)} x(psi)^{-1/r} dpsi
    BigFloat phi_y = phi_of_x(r, y, bits);
    BigFloat direct = density_g(r, phi_y);
    BigFloat margin = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 4));
    BigFloat tol = BigFloat::from_double(1e-14, bits);
    BigFloat inv_r = BigFloat::from_rational(Rational(1, static_cast<long>(r)), bits);
    auto f = [&](const BigFloat& psi) {
        return pow(x_of_phi(r, psi), -inv_r);
    };
    BigFloat integral = integrate(f, margin, phi_y, tol, bits);
    BigFloat pref = pow(y, inv_r - BigFloat::from_long(1, bits)) * (static_cast<long>(r) + 1) /
                    (static_cast<long>(r) * BigFloat::pi(bits));
    return {direct, pref * integral};
}

double endpoint_exponent(DensityKind kind, unsigned r, Endpoint end, mpfr_prec_t bits) {
    if (r > 6) throw ValidationError("endpoint_exponent: r must be <= 6");
    // sample distances delta in [1e-8, 1e-4] on the kind's support scale
    const int npts = 9;
    std::vector<double> logd(npts), logf(npts);
    Rational right = (kind == DensityKind::v) ? Rational(1) : support_endpoint(r);
    BigFloat right_f = BigFloat::from_rational(right, bits);

    for (int i = 0; i < npts; ++i) {
        double expo = -8.0 + 4.0 * i / (npts - 1);
        BigFloat delta = pow(BigFloat::from_long(10, bits), BigFloat::from_double(expo, bits)) *
                         right_f;
        BigFloat x = (end == Endpoint::Left) ? delta : right_f - delta;
        BigFloat dens(bits);
        switch (kind) {
            case DensityKind::v:
                dens = density_v(r, x, bits);
                break;
            case DensityKind::u:
                dens = density_u(r, phi_of_x(r, x, bits));
                break;
            case DensityKind::g:
                dens = density_g(r, phi_of_x(r, x, bits));
                break;
            case DensityKind::w:
                dens = density_w(r, phi_of_x(r, x, bits));
                break;
            case DensityKind::xg:
                dens = weight_xg(r, phi_of_x(r, x, bits));
                break;
        }
        logd[i] = log(delta).to_double();
        logf[i] = log(dens).to_double();
    }
    // least-squares slope
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < npts; ++i) {
        sx += logd[i];
        sy += logf[i];
        sxx += logd[i] * logd[i];
        sxy += logd[i] * logf[i];
    }
    return (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
}

ComplexBF z_of_xt(unsigned r, const ComplexBF& x, const Rational& t, mpfr_prec_t bits) {
    if (t <= 0 || t > 1) throw ValidationError("z_of_xt: t must be in (0, 1]");
    // z(t xhat / r, t) = t zhat(xhat) / r  =>  xhat = r x / t
    BigFloat tf = BigFloat::from_rational(t, bits);
    ComplexBF xh = x * ComplexBF::real(BigFloat::from_long(static_cast<long>(r), bits) / tf);
    FCBranch br = fc_branch(r, xh, bits);
    return br.z_hat * ComplexBF::real(tf / static_cast<long>(r));
}

namespace {

ComplexBF mlt_eval(unsigned r, const ComplexBF& x, const Rational& t, const ComplexBF& z) {
    // (z - t)^{r+1} - x (z - t(r+1)/r)^r
    mpfr_prec_t bits = z.re.precision();
    ComplexBF tc = ComplexBF::real(BigFloat::from_rational(t, bits));
    ComplexBF tb = ComplexBF::real(
        BigFloat::from_rational(t * Rational(static_cast<long>(r) + 1, static_cast<long>(r)), bits));
    return pow_int(z - tc, static_cast<long>(r) + 1) - x * pow_int(z - tb, r);
}

ComplexBF mlt_eval_dz(unsigned r, const ComplexBF& x, const Rational& t, const ComplexBF& z) {
    mpfr_prec_t bits = z.re.precision();
    ComplexBF tc = ComplexBF::real(BigFloat::from_rational(t, bits));
    ComplexBF tb = ComplexBF::real(
        BigFloat::from_rational(t * Rational(static_cast<long>(r) + 1, static_cast<long>(r)), bits));
    ComplexBF rp1{BigFloat::from_long(static_cast<long>(r) + 1, bits), BigFloat(bits)};
    ComplexBF rr{BigFloat::from_long(static_cast<long>(r), bits), BigFloat(bits)};
    return rp1 * pow_int(z - tc, r) - x * rr * pow_int(z - tb, static_cast<long>(r) - 1);
}

}  // namespace

ComplexBF z_of_xt_direct(unsigned r, const ComplexBF& x, const Rational& t, mpfr_prec_t bits) {
    if (t <= 0 || t > 1) throw ValidationError("z_of_xt_direct: t must be in (0, 1]");
    ComplexBF xw{BigFloat(bits), BigFloat(bits)};
    mpfr_set(xw.re.raw(), x.re.raw(), MPFR_RNDN);
    mpfr_set(xw.im.raw(), x.im.raw(), MPFR_RNDN);

    int dir = xw.im.sign() >= 0 ? 1 : -1;
    BigFloat big = BigFloat::from_long(1000000, bits);
    ComplexBF w0{BigFloat(bits), dir * big};
    ComplexBF w1{BigFloat(bits), dir * (xw.abs() + BigFloat::from_long(1, bits))};

    BigFloat tol = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 8));
    auto newton = [&](const ComplexBF& at, ComplexBF z, int iters) -> std::optional<ComplexBF> {
        for (int i = 0; i < iters; ++i) {
            ComplexBF f = mlt_eval(r, at, t, z);
            ComplexBF df = mlt_eval_dz(r, at, t, z);
            if (df.abs().sign() == 0) return std::nullopt;
            ComplexBF step = f / df;
            z = z - step;
            if (step.abs() <= tol * (z.abs() + BigFloat::from_long(1, bits))) return z;
        }
        return std::nullopt;
    };

    ComplexBF z = w0;  // z ~ x at infinity
    auto zn = newton(w0, z, 200);
    if (!zn) throw NumericError("continuation failed at seed");
    z = *zn;

    const ComplexBF waypoints[2] = {w1, xw};
    ComplexBF from = w0;
    for (const ComplexBF& to : waypoints) {
        BigFloat prog(bits);
        BigFloat one_f = BigFloat::from_long(1, bits);
        BigFloat dt = BigFloat::from_rational(Rational(1, 4), bits);
        BigFloat min_dt = pow_int(BigFloat::from_long(2, bits), -26);
        while (prog < one_f) {
            BigFloat tn = prog + dt;
            if (tn > one_f) tn = one_f;
            ComplexBF xt = from + ComplexBF{tn, BigFloat(bits)} * (to - from);
            auto step = newton(xt, z, 200);
            if (step) {
                z = *step;
                prog = tn;
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

DensityCurve make_density_curve(DensityKind kind, unsigned r, size_t grid, mpfr_prec_t bits) {
    if (grid < 2) throw ValidationError("grid must be >= 2");
    DensityCurve out;
    out.kind = kind;
    out.r = r;
    Rational cr = support_endpoint(r);
    out.support_right = (kind == DensityKind::v) ? 1.0 : to_double(cr);

    BigFloat upper = BigFloat::pi(bits) / (static_cast<long>(r) + 1);
    BigFloat crf = BigFloat::from_rational(cr, bits);
    out.samples.reserve(grid);
    for (size_t i = 1; i + 1 <= grid; ++i) {
        BigFloat phi = upper * static_cast<long>(i) / static_cast<long>(grid);
        BigFloat xh = x_of_phi(r, phi);
        BigFloat dens(bits), x = xh, cdf(bits);
        switch (kind) {
            case DensityKind::w:
                dens = density_w(r, phi);
                cdf = cdf_w(r, xh, bits);
                break;
            case DensityKind::v:
                x = xh / crf;
                dens = crf * density_w(r, phi);
                cdf = cdf_w(r, xh, bits);
                break;
            case DensityKind::u:
                dens = density_u(r, phi);
                cdf = cdf_u(r, xh, bits);
                break;
            case DensityKind::g:
                dens = density_g(r, phi);
                cdf = cdf_g(r, xh, bits);
                break;
            case DensityKind::xg:
                dens = weight_xg(r, phi);
                // CDF of the shifted law x g_r
                cdf = cdf_by_phi_quadrature(r, xh, bits,
                                            [](unsigned rr, const BigFloat& p) {
                                                return x_of_phi(rr, p) * density_g(rr, p);
                                            });
                break;
        }
        out.samples.push_back(
            {phi.to_double(), x.to_double(), dens.to_double(), cdf.to_double()});
    }
    return out;
}

}  // namespace mops
