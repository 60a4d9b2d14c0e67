#include "mops/families.hpp"

#include <algorithm>

#include "mops/errors.hpp"
#include "mops/linsolve.hpp"
#include "mops/moments.hpp"
#include "mops/recurrence.hpp"

namespace mops {

const char* family_name(Family f) {
    switch (f) {
        case Family::JacobiPineiro: return "jacobi-pineiro";
        case Family::MultipleLaguerre: return "multiple-laguerre";
        case Family::MeijerG: return "meijer-g";
    }
    return "?";
}

FamilyParams FamilyParams::jacobi_pineiro(std::vector<Rational> alpha, Rational beta) {
    FamilyParams p;
    p.family = Family::JacobiPineiro;
    p.r = static_cast<unsigned>(alpha.size());
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    p.validate();
    return p;
}

FamilyParams FamilyParams::multiple_laguerre(std::vector<Rational> alpha) {
    FamilyParams p;
    p.family = Family::MultipleLaguerre;
    p.r = static_cast<unsigned>(alpha.size());
    p.alpha = std::move(alpha);
    p.validate();
    return p;
}

FamilyParams FamilyParams::meijer_g(std::vector<unsigned> nu) {
    FamilyParams p;
    p.family = Family::MeijerG;
    p.r = static_cast<unsigned>(nu.size());
    p.nu = std::move(nu);
    p.validate();
    return p;
}

void FamilyParams::validate() const {
    if (r == 0) throw ValidationError("r must be >= 1");
    if (family == Family::MeijerG) {
        if (nu.size() != r) throw ValidationError("nu must have length r");
        return;
    }
    if (alpha.size() != r) throw ValidationError("alpha must have length r");
    for (size_t j = 0; j < alpha.size(); ++j)
        if (alpha[j] <= -1)
            throw ValidationError("alpha[" + std::to_string(j + 1) + "] <= -1: weight not integrable");
    if (family == Family::JacobiPineiro && beta <= -1)
        throw ValidationError("beta <= -1: weight not integrable");
    for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = i + 1; j < alpha.size(); ++j) {
            Rational d = alpha[i] - alpha[j];
            if (d.get_den() == 1)
                throw ValidationError("alpha difference is an integer: violates normality");
        }
}

namespace {

// Normalized moment of weight j at power t.
Rational weight_moment(const FamilyParams& params, size_t j, unsigned long t) {
    if (params.family == Family::JacobiPineiro)
        return beta_moment_ratio(params.alpha[j], params.beta, t);
    return gamma_moment_ratio(params.alpha[j], t);
}

}  // namespace

ExactPolynomial build_jp(const FamilyParams& params, const MultiIndex& n) {
    params.validate();
    if (params.family != Family::JacobiPineiro)
        throw ValidationError("build_jp: family mismatch");
    if (n.r() != params.r) throw ValidationError("multi-index length != r");
    const unsigned long deg = n.size();
    if (deg == 0) return ExactPolynomial::one();

    // Unknowns c_0..c_{deg-1}; one row per orthogonality condition (j, k):
    //   sum_m c_m R_j(k+m) = -R_j(k+deg)
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    a.reserve(deg);
    for (size_t j = 0; j < params.r; ++j) {
        for (unsigned long k = 0; k < n[j]; ++k) {
            std::vector<Rational> row(deg);
            for (unsigned long m = 0; m < deg; ++m) row[m] = weight_moment(params, j, k + m);
            a.push_back(std::move(row));
            rhs.push_back(-weight_moment(params, j, k + deg));
        }
    }
    auto sol = solve_linear_exact(std::move(a), std::move(rhs));
    if (!sol) throw NumericError("singular system: index is not normal");
    sol->push_back(Rational(1));
    return ExactPolynomial(std::move(*sol));
}

ExactPolynomial build_ml_explicit(const FamilyParams& params, const MultiIndex& n) {
    params.validate();
    if (params.family != Family::MultipleLaguerre)
        throw ValidationError("build_ml_explicit: family mismatch");
    if (n.r() != params.r) throw ValidationError("multi-index length != r");
    const size_t r = params.r;
    const unsigned long deg = n.size();

    std::vector<Rational> coeffs(deg + 1, Rational(0));
    // Iterate the full lattice k = (k_1..k_r), 0 <= k_j <= n_j.
    std::vector<unsigned> k(r, 0);
    for (;;) {
        unsigned long ksum = 0;
        for (unsigned v : k) ksum += v;

        Rational term(1);
        // falling factorials n_j!/(n_j-k_j)!
        for (size_t j = 0; j < r; ++j)
            for (unsigned i = 0; i < k[j]; ++i) term *= Rational(static_cast<long>(n[j] - i));
        // binomial chain: upper argument for weight j is
        //   (n_j + ... + n_r) + alpha_j - (k_{j+1} + ... + k_r)
        unsigned long tail_n = 0, tail_k = 0;
        for (size_t j = r; j-- > 0;) {
            tail_n += n[j];
            Rational upper = Rational(static_cast<long>(tail_n)) + params.alpha[j] -
                             Rational(static_cast<long>(tail_k));
            term *= binomial_rational(upper, k[j]);
            tail_k += k[j];
        }
        if (ksum % 2 == 1) term = -term;
        coeffs[deg - ksum] += term;

        // next lattice point
        size_t pos = 0;
        while (pos < r && k[pos] == n[pos]) {
            k[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
        ++k[pos];
    }
    ExactPolynomial p(std::move(coeffs));
    // The sum is already monic; keep the normalization explicit anyway.
    return p.monic();
}

ExactPolynomial build_meijer_stepline(const std::vector<unsigned>& nu, unsigned n) {
    if (nu.empty()) throw ValidationError("nu must have length >= 1");
    std::vector<Rational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c(binomial_integer(n, k));
        for (unsigned v : nu)
            c *= Rational(factorial_integer(n + v)) / Rational(factorial_integer(k + v));
        // signs (-1)^n (-1)^k cancel at k = n, making the sum monic
        if ((n - k) % 2 == 1) c = -c;
        coeffs[k] = c;
    }
    return ExactPolynomial(std::move(coeffs)).monic();
}

ExactPolynomial build_direct(const FamilyParams& params, const MultiIndex& n) {
    switch (params.family) {
        case Family::JacobiPineiro: return build_jp(params, n);
        case Family::MultipleLaguerre: return build_ml_explicit(params, n);
        case Family::MeijerG:
            return build_meijer_stepline(params.nu, static_cast<unsigned>(n.size()));
    }
    throw ValidationError("unknown family");
}

std::vector<unsigned> canonical_path(const MultiIndex& n) {
    std::vector<unsigned> path;
    path.reserve(n.size());
    for (size_t j = 0; j < n.r(); ++j)
        for (unsigned i = 0; i < n[j]; ++i) path.push_back(static_cast<unsigned>(j + 1));
    return path;
}

namespace {

ExactPolynomial recurrence_step(const FamilyParams& params, const MultiIndex& at, size_t k,
                                const ExactPolynomial& p_at,
                                const std::function<const ExactPolynomial&(const MultiIndex&)>& lower) {
    NNCoefficients c = nn_coeffs(params, at);
    // P_{n+e_k} = (x - b_k) P_n - sum_j a_j P_{n-e_j}
    ExactPolynomial next = ExactPolynomial::linear(c.b[k]) * p_at;
    for (size_t j = 0; j < at.r(); ++j)
        if (at[j] > 0) next = next - c.a[j] * lower(at.minus(j));
    return next;
}

}  // namespace

RecurrenceTable::RecurrenceTable(FamilyParams params) : params_(std::move(params)) {
    params_.validate();
    if (params_.family == Family::MeijerG)
        throw ValidationError("recurrence construction is not available for meijer-g");
}

const ExactPolynomial& RecurrenceTable::get(const MultiIndex& n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    if (n.size() == 0)
        return cache_.emplace(n, ExactPolynomial::one()).first->second;

    // canonical rule: the last step raises the highest nonzero coordinate
    size_t k = n.r();
    while (k-- > 0)
        if (n[k] > 0) break;
    MultiIndex pred = n.minus(k);
    const ExactPolynomial& p_pred = get(pred);
    ExactPolynomial next = recurrence_step(
        params_, pred, k, p_pred,
        [this](const MultiIndex& m) -> const ExactPolynomial& { return get(m); });
    return cache_.emplace(n, std::move(next)).first->second;
}

ExactPolynomial build_via_recurrence(const FamilyParams& params, const MultiIndex& n,
                                     const std::vector<unsigned>& path) {
    params.validate();
    if (params.family == Family::MeijerG)
        throw ValidationError("recurrence construction is not available for meijer-g");
    if (n.r() != params.r) throw ValidationError("multi-index length != r");
    std::vector<unsigned> counts(params.r, 0);
    for (unsigned d : path) {
        if (d < 1 || d > params.r) throw ValidationError("path direction out of range");
        counts[d - 1] += 1;
    }
    if (!(MultiIndex(counts) == n))
        throw ValidationError("path does not reach the requested multi-index");

    RecurrenceTable table(params);
    MultiIndex at = MultiIndex::zeros(params.r);
    ExactPolynomial p = ExactPolynomial::one();
    for (unsigned d : path) {
        p = recurrence_step(params, at, d - 1, p,
                            [&table](const MultiIndex& m) -> const ExactPolynomial& {
                                return table.get(m);
                            });
        at = at.plus(d - 1);
    }
    return p;
}

OrthogonalityResult orthogonality_check(const FamilyParams& params, const ExactPolynomial& p,
                                        const MultiIndex& n) {
    params.validate();
    if (params.family == Family::MeijerG)
        throw ValidationError("orthogonality_check: no moment kernel for meijer-g");
    if (p.degree() != static_cast<long>(n.size()))
        throw ValidationError("orthogonality_check: degree != |n|");

    for (size_t j = 0; j < params.r; ++j) {
        for (unsigned long k = 0; k < n[j]; ++k) {
            Rational integral(0);
            for (long m = 0; m <= p.degree(); ++m)
                integral += p.coeff(m) * weight_moment(params, j, k + m);
            if (integral != 0) {
                OrthogonalityResult res;
                res.ok = false;
                res.weight_index = j;
                res.power = k;
                res.witness = integral;
                return res;
            }
        }
    }
    return OrthogonalityResult{};
}

}  // namespace mops
