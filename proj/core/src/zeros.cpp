#include "mops/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "mops/errors.hpp"

namespace mops {

namespace {

// Grid warped toward both endpoints: u = i/m maps to
// i^g / (i^g + (m-i)^g), matching the endpoint clustering of
// orthogonal-polynomial zeros.
Rational warp_point(unsigned long i, unsigned long m, unsigned g) {
    Integer a(static_cast<unsigned long>(i)), b(static_cast<unsigned long>(m - i));
    Integer ag(1), bg(1);
    for (unsigned t = 0; t < g; ++t) {
        ag *= a;
        bg *= b;
    }
    return Rational(ag) / Rational(ag + bg);
}

struct SamplePoint {
    Rational x;
    int sign;
};

// Certified nonzero sign at a grid point; nudges the point inside its cell
// when it happens to be an exact root.
SamplePoint sample_sign(const ExactPolynomial& p, const Rational& x, const Rational& cell) {
    Rational at = x;
    for (long nudge = 7; nudge < 60; nudge += 4) {
        int s = certified_sign(p, at);
        if (s != 0) return {at, s};
        at = x + cell / Rational(nudge);
    }
    throw NumericError("isolation failed: could not find nonzero sample sign");
}

void exact_confirm(const ExactPolynomial& p, const std::vector<Enclosure>& enc) {
    for (const auto& e : enc) {
        if (sgn(p.eval(e.lo)) * sgn(p.eval(e.hi)) >= 0)
            throw NumericError("isolation failed: enclosure lost its sign change");
    }
}

}  // namespace

std::vector<BigFloat> ZeroSet::midpoints(mpfr_prec_t bits) const {
    std::vector<BigFloat> out;
    out.reserve(enclosures.size());
    for (const auto& e : enclosures) out.push_back(BigFloat::from_rational(e.midpoint(), bits));
    return out;
}

std::vector<double> ZeroSet::scaled_midpoints() const {
    std::vector<double> out;
    out.reserve(enclosures.size());
    for (const auto& e : enclosures) out.push_back(to_double(Rational(e.midpoint() * scale)));
    return out;
}

ZeroSet isolate_zeros(const ExactPolynomial& p, const Rational& lo,
                      std::optional<Rational> hi, const IsolationOptions& opts) {
    if (!p.is_monic()) throw ValidationError("isolate_zeros: polynomial must be monic");
    const long degree = p.degree();
    ZeroSet out;
    out.poly = p;
    if (degree == 0) return out;

    Rational upper;
    if (hi) {
        upper = *hi;
    } else if (opts.upper_hint) {
        upper = *opts.upper_hint;
    } else {
        upper = lo + 4;
    }

    const unsigned g = std::max(1u, opts.grading);
    unsigned long m = 4ul * static_cast<unsigned long>(degree);

    while (true) {
        // scan [lo, upper] on the warped grid
        const Rational span = upper - lo;
        std::vector<Rational> xs(m + 1);
        for (unsigned long i = 0; i <= m; ++i) xs[i] = lo + span * warp_point(i, m, g);
        std::vector<SamplePoint> pts;
        pts.reserve(m + 1);
        for (unsigned long i = 0; i <= m; ++i) {
            // nudges stay inside the (non-uniform) local cell
            Rational cell = (i < m) ? (xs[i + 1] - xs[i]) : (xs[i] - xs[i - 1]);
            pts.push_back(sample_sign(p, xs[i], cell / 8));
        }
        std::vector<Enclosure> enc;
        for (unsigned long i = 0; i < m; ++i)
            if (pts[i].sign * pts[i + 1].sign < 0) enc.push_back({pts[i].x, pts[i + 1].x});

        if (static_cast<long>(enc.size()) == degree) {
            exact_confirm(p, enc);
            out.enclosures = std::move(enc);
            return out;
        }
        if (static_cast<long>(enc.size()) > degree)
            throw NumericError("isolation failed: more sign changes than degree");

        bool grew = false;
        if (!hi) {
            // roots may lie beyond the current bound; grow alongside grid
            upper = lo + (upper - lo) * 4;
            grew = true;
        }
        m *= 2;
        if (m > opts.max_grid && !grew)
            throw NumericError("isolation failed: grid budget exhausted with " +
                               std::to_string(enc.size()) + " of " + std::to_string(degree) +
                               " zeros");
        if (m > opts.max_grid)
            throw NumericError("isolation failed: could not certify all zeros");
    }
}

namespace {

// One certified bisection step; handles the midpoint landing on a root by
// sliding the split point inside the interval.
void bisect_once(const ExactPolynomial& p, Enclosure& e, int sign_lo) {
    static const long num[] = {1, 2, 3, 4, 5};
    static const long den[] = {2, 5, 7, 9, 11};
    for (int c = 0; c < 5; ++c) {
        Rational mid = e.lo + e.width() * Rational(num[c], den[c]);
        int s = certified_sign(p, mid);
        if (s == 0) continue;
        if (s == sign_lo)
            e.lo = mid;
        else
            e.hi = mid;
        return;
    }
    throw NumericError("refine failed: no usable split point");
}

}  // namespace

ZeroSet refine(ZeroSet z, const Rational& tol) {
    if (tol <= 0) throw ValidationError("refine: tol must be positive");
    for (auto& e : z.enclosures) {
        int sign_lo = certified_sign(z.poly, e.lo);
        while (true) {
            Rational mid_abs = abs(e.midpoint());
            Rational bound = tol * std::max(Rational(1), mid_abs);
            if (e.width() <= bound) break;
            bisect_once(z.poly, e, sign_lo);
        }
    }
    exact_confirm(z.poly, z.enclosures);
    return z;
}

namespace {

enum class Order { Less, Greater, Unknown };

Order compare(const Enclosure& a, const Enclosure& b) {
    if (a.hi < b.lo) return Order::Less;
    if (b.hi < a.lo) return Order::Greater;
    return Order::Unknown;
}

}  // namespace

bool interlacing_check(const ZeroSet& z1, const ZeroSet& z2) {
    if (z2.count() != z1.count() + 1)
        throw ValidationError("interlacing_check: degree(z2) must be degree(z1) + 1");

    ZeroSet a = z1, b = z2;
    auto shrink = [](ZeroSet& z, size_t i) {
        int s = certified_sign(z.poly, z.enclosures[i].lo);
        bisect_once(z.poly, z.enclosures[i], s);
    };
    for (int budget = 0; budget < 220; ++budget) {
        // need z2[i] < z1[i] < z2[i+1] for every i
        bool all_ok = true;
        for (size_t i = 0; i < a.count() && all_ok; ++i) {
            Order left = compare(b.enclosures[i], a.enclosures[i]);
            if (left == Order::Greater) return false;
            if (left == Order::Unknown) {
                shrink(a, i);
                shrink(b, i);
                all_ok = false;
                break;
            }
            Order right = compare(a.enclosures[i], b.enclosures[i + 1]);
            if (right == Order::Greater) return false;
            if (right == Order::Unknown) {
                shrink(a, i);
                shrink(b, i + 1);
                all_ok = false;
                break;
            }
        }
        if (all_ok) return true;
    }
    throw NumericError("undecidable at precision: interlacing enclosures still overlap");
}

EmpiricalCDF empirical_cdf(const ZeroSet& z, mpfr_prec_t bits) {
    EmpiricalCDF out;
    out.points.reserve(z.count());
    BigFloat s = BigFloat::from_rational(z.scale, bits);
    for (const auto& m : z.midpoints(bits)) out.points.push_back((m * s).to_double());
    std::sort(out.points.begin(), out.points.end());
    return out;
}

double EmpiricalCDF::value_at(double x) const {
    auto it = std::upper_bound(points.begin(), points.end(), x);
    return static_cast<double>(it - points.begin()) / static_cast<double>(points.size());
}

double ks_distance(const EmpiricalCDF& e, const std::function<double(double)>& cdf) {
    const size_t n = e.points.size();
    if (n == 0) throw ValidationError("ks_distance: empty sample");
    double best = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double f = cdf(e.points[i]);
        best = std::max(best, std::abs(f - static_cast<double>(i) / n));
        best = std::max(best, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return best;
}

ComplexBF log_derivative(const ExactPolynomial& p, const ComplexBF& x, const Rational& scale) {
    if (p.degree() < 1) throw ValidationError("log_derivative: degree must be >= 1");
    if (scale <= 0) throw ValidationError("log_derivative: scale must be positive");
    ExactPolynomial dp = p.derivative();
    const long n = p.degree();

    auto eval_at = [&](mpfr_prec_t bits) -> ComplexBF {
        BigFloat s = BigFloat::from_rational(scale, bits);
        ComplexBF y{BigFloat(bits), BigFloat(bits)};
        mpfr_set(y.re.raw(), x.re.raw(), MPFR_RNDN);
        mpfr_set(y.im.raw(), x.im.raw(), MPFR_RNDN);
        y = y / ComplexBF::real(s);
        ComplexBF pv = p.eval_complex(y);
        if (pv.abs().sign() == 0) throw NumericError("evaluation at a zero");
        ComplexBF dv = dp.eval_complex(y);
        ComplexBF r = dv / pv;
        r.re = r.re / n;
        r.im = r.im / n;
        return r / ComplexBF::real(s);
    };

    ComplexBF prev = eval_at(128);
    for (mpfr_prec_t bits = 256; bits <= 8192; bits *= 2) {
        ComplexBF cur = eval_at(bits);
        BigFloat diff = (cur - prev).abs();
        BigFloat rel_tol = BigFloat::from_double(1e-20, bits) * (cur.abs() + BigFloat::from_long(1, bits));
        if (diff <= rel_tol) return cur;
        prev = cur;
    }
    throw NumericError("log_derivative: precision budget exhausted");
}

}  // namespace mops
