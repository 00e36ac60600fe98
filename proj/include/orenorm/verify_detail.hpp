#pragma once

// Pieces of the verification harness shared between the acceptance checks and the
// golden examples. Not part of the stable interface.

#include <vector>

#include "orenorm/norm.hpp"
#include "orenorm/rings.hpp"
#include "orenorm/verify.hpp"

namespace orenorm::verify_detail {

/// F_25(u) with δ = c·u·d/du, c² = −2 (so c⁴ = −1); g_ok records that g = t⁵ + t.
struct QuinticRing {
    DeltaRing ring;
    bool g_ok = false;
};
QuinticRing quintic_ring();

/// ρ(t⁴ + a) as displayed in the literature: row 0 = [a, 0, 0, 0, 1]; row i ≥ 1 holds
/// C(i,j)δ^{i−j}(a) below the diagonal, plus x at j = i−1, and a − 1 on the diagonal.
RegRepMatrix<RationalFunction> quintic_displayed_matrix(const DeltaRing& ring, const RationalFunction& a);

struct QuinticTerms {
    RationalFunction actual;      // constant term of N(t⁴ + a)
    RationalFunction stated;      // the published closed form
    RationalFunction rederived;   // the closed form with every δ-dependent term negated
    RationalFunction matrix_det;  // det of the displayed matrix at x = 0
};
QuinticTerms quintic_terms(const DeltaRing& ring, const RationalFunction& a);

/// a ∈ {u, u² + 1, 1/u}
std::vector<RationalFunction> quintic_values(const DeltaRing& ring);

SuiteReport run_golden_suite();

}  // namespace orenorm::verify_detail
