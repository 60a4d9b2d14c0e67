#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "mops/multi_index.hpp"
#include "mops/polynomial.hpp"
#include "mops/rational.hpp"

namespace mops {

enum class Family { JacobiPineiro, MultipleLaguerre, MeijerG };

const char* family_name(Family f);

struct FamilyParams {
    Family family = Family::JacobiPineiro;
    unsigned r = 1;
    std::vector<Rational> alpha;  // Jacobi-Pineiro, multiple Laguerre
    Rational beta = 0;            // Jacobi-Pineiro only
    std::vector<unsigned> nu;     // Meijer-G stepline only

    // Throws ValidationError naming the violated constraint: alpha_j > -1,
    // beta > -1, and for r >= 2 the normality condition
    // alpha_i - alpha_j not an integer.
    void validate() const;

    static FamilyParams jacobi_pineiro(std::vector<Rational> alpha, Rational beta);
    static FamilyParams multiple_laguerre(std::vector<Rational> alpha);
    static FamilyParams meijer_g(std::vector<unsigned> nu);
};

// Monic Jacobi-Pineiro polynomial from the exact orthogonality system
// (|n| x |n| linear solve over the rationals).
ExactPolynomial build_jp(const FamilyParams& params, const MultiIndex& n);

// Monic multiple Laguerre polynomial of the first kind from the explicit
// nested binomial sum.
ExactPolynomial build_ml_explicit(const FamilyParams& params, const MultiIndex& n);

// Monic Meijer-G stepline polynomial of degree n.
ExactPolynomial build_meijer_stepline(const std::vector<unsigned>& nu, unsigned n);

// Direct construction dispatch (MeijerG uses the stepline with degree |n|).
ExactPolynomial build_direct(const FamilyParams& params, const MultiIndex& n);

// Same polynomial built by |n| nearest-neighbor recurrence steps.  The path
// lists the direction raised at each step (1-based indices, counts must
// reach n from the zero index).  Off-path predecessors are built through the
// canonical rule (raise the highest nonzero coordinate last).
ExactPolynomial build_via_recurrence(const FamilyParams& params, const MultiIndex& n,
                                     const std::vector<unsigned>& path);

std::vector<unsigned> canonical_path(const MultiIndex& n);

struct OrthogonalityResult {
    bool ok = true;
    // first failing condition, when not ok
    size_t weight_index = 0;  // j (0-based)
    unsigned long power = 0;  // k
    std::optional<Rational> witness;
};

// Exact check of all |n| normalized orthogonality integrals (JP and ML).
OrthogonalityResult orthogonality_check(const FamilyParams& params, const ExactPolynomial& p,
                                        const MultiIndex& n);

// Memoized recurrence-based builder over the lower set of requested indices.
// Useful for diagonal experiments where many neighbors are needed.
class RecurrenceTable {
  public:
    explicit RecurrenceTable(FamilyParams params);
    const ExactPolynomial& get(const MultiIndex& n);

  private:
    FamilyParams params_;
    std::unordered_map<MultiIndex, ExactPolynomial, MultiIndexHash> cache_;
};

}  // namespace mops
