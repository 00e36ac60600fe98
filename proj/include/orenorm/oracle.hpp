#pragma once

// Brute-force ground truth for small skew rings. Multiplication and right division are
// reimplemented here on plain coefficient vectors; nothing from the norm engine is used.

#include <cstdint>
#include <vector>

#include "orenorm/factor.hpp"
#include "orenorm/rings.hpp"

namespace orenorm {

struct OracleBudget {
    /// Upper bound on candidate right divisors enumerated per degree.
    std::uint64_t max_candidates = 1000000;
    double seconds = 60.0;
};

namespace oracle {

/// Coefficients a_0..a_m of Σ a_i tⁱ in K[t; Frobenius^j].
using Coeffs = std::vector<GfElem>;

Coeffs multiply(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power);
/// Remainder of f under right division by monic-or-unit-leading g.
Coeffs right_remainder(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power);
Coeffs right_quotient(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power);

}  // namespace oracle

/// True iff no monic g with 1 ≤ deg g < deg f right-divides f.
bool brute_irreducible(const SigmaPoly& f, const OracleBudget& budget = {});

/// Every decomposition unit·f_1⋯f_l into monic irreducibles, canonically ordered.
std::vector<Factorization<GfElem>> brute_factorizations(const SigmaPoly& f, const OracleBudget& budget = {});

/// δ case: checks unit·f_1⋯f_l = f by independent expansion of t·a = a·t + δ(a).
bool check_claimed_factorization(const DeltaPoly& f, const RationalFunction& unit,
                                 const std::vector<DeltaPoly>& factors);

}  // namespace orenorm
