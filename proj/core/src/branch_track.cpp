#include "mops/branch_track.hpp"

#include "mops/errors.hpp"

namespace mops {

namespace {

ComplexBF eval_monic(const std::vector<ComplexBF>& c, const ComplexBF& z, mpfr_prec_t bits) {
    ComplexBF acc{BigFloat::from_long(1, bits), BigFloat(bits)};
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

}  // namespace

std::vector<ComplexBF> all_roots(const std::vector<ComplexBF>& coeffs, mpfr_prec_t bits,
                                 const std::vector<ComplexBF>* warm) {
    const size_t n = coeffs.size();
    if (n == 0) return {};
    std::vector<ComplexBF> z;
    if (warm && warm->size() == n) {
        z = *warm;
    } else {
        // standard staggered start on a spiral
        z.reserve(n);
        ComplexBF seed = ComplexBF::from_doubles(0.4, 0.9, bits);
        ComplexBF cur{BigFloat::from_long(1, bits), BigFloat(bits)};
        // scale by a coarse root bound
        double bound = 1.0;
        for (const auto& c : coeffs) bound = std::max(bound, c.abs().to_double());
        ComplexBF scale = ComplexBF::from_doubles(1.0 + bound, 0.0, bits);
        for (size_t k = 0; k < n; ++k) {
            cur = cur * seed;
            z.push_back(cur * scale);
        }
    }

    BigFloat tol = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) - 10));
    for (int it = 0; it < 600; ++it) {
        BigFloat worst(bits);
        for (size_t k = 0; k < n; ++k) {
            ComplexBF num = eval_monic(coeffs, z[k], bits);
            ComplexBF den{BigFloat::from_long(1, bits), BigFloat(bits)};
            for (size_t j = 0; j < n; ++j)
                if (j != k) den = den * (z[k] - z[j]);
            if (den.abs().sign() == 0) {
                // coincident iterates: nudge apart
                z[k].re = z[k].re + pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) / 2));
                continue;
            }
            ComplexBF step = num / den;
            z[k] = z[k] - step;
            BigFloat rel = step.abs() / (z[k].abs() + BigFloat::from_long(1, bits));
            if (rel > worst) worst = rel;
        }
        if (worst <= tol) return z;
    }
    // double roots converge linearly and may stop just short of tol; the
    // residual decides whether the cluster is acceptable
    for (size_t k = 0; k < n; ++k) {
        BigFloat res = eval_monic(coeffs, z[k], bits).abs();
        BigFloat scale = pow(z[k].abs() + BigFloat::from_long(1, bits),
                             BigFloat::from_long(static_cast<long>(n), bits));
        if (res > BigFloat::from_double(1e-25, bits) * scale)
            throw NumericError("continuation failed: root finder did not converge");
    }
    return z;
}

ComplexBF track_branch(
    const std::function<std::vector<ComplexBF>(const ComplexBF&)>& coeff_fn,
    const std::vector<ComplexBF>& waypoints,
    const std::function<size_t(const std::vector<ComplexBF>&)>& pick, mpfr_prec_t bits) {
    if (waypoints.size() < 2) throw ValidationError("track_branch: need at least two waypoints");

    std::vector<ComplexBF> roots = all_roots(coeff_fn(waypoints[0]), bits, nullptr);
    size_t branch = pick(roots);
    if (branch >= roots.size()) throw NumericError("continuation failed: no seed branch");

    BigFloat abs_floor = pow_int(BigFloat::from_long(2, bits), -(static_cast<long>(bits) / 2));
    ComplexBF from = waypoints[0];
    for (size_t w = 1; w < waypoints.size(); ++w) {
        const ComplexBF& to = waypoints[w];
        BigFloat t(bits);
        BigFloat one = BigFloat::from_long(1, bits);
        BigFloat dt = BigFloat::from_rational(Rational(1, 8), bits);
        BigFloat min_dt = pow_int(BigFloat::from_long(2, bits), -30);
        while (t < one) {
            BigFloat tn = t + dt;
            if (tn > one) tn = one;
            ComplexBF xt = from + ComplexBF{tn, BigFloat(bits)} * (to - from);
            std::vector<ComplexBF> next = all_roots(coeff_fn(xt), bits, &roots);
            // movement of the tracked root vs. its separation from the rest
            BigFloat moved = (next[branch] - roots[branch]).abs();
            BigFloat sep(bits);
            bool first = true;
            for (size_t j = 0; j < next.size(); ++j) {
                if (j == branch) continue;
                BigFloat d = (next[j] - roots[branch]).abs();
                if (first || d < sep) sep = d;
                first = false;
            }
            bool safe = first || moved * 3 <= sep ||
                        moved <= abs_floor * (roots[branch].abs() + one);
            if (safe) {
                roots = std::move(next);
                t = tn;
                dt = dt + dt;
            } else {
                dt = dt / 2;
                if (dt < min_dt) throw NumericError("continuation failed");
            }
        }
        from = to;
    }
    return roots[branch];
}

}  // namespace mops
