#pragma once

// Factoring central polynomials over a finite F, the norm-based irreducibility test,
// and rough factorizations of skew polynomials.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orenorm/central.hpp"
#include "orenorm/norm.hpp"
#include "orenorm/rings.hpp"

namespace orenorm {

template <class K>
struct CentralFactor {
    CentralPolynomial<K> factor;
    int multiplicity = 1;
};

/// Monic irreducible factorization of ĥ over the finite subfield F spanned over F_p by
/// `basis` (|F| = order), by squarefree, distinct-degree and seeded equal-degree splitting.
/// Factors are sorted by degree, then by coefficients.
std::vector<Poly<GfElem>> factor_over_subfield(const Poly<GfElem>& h, const std::vector<GfElem>& basis,
                                               std::uint64_t order, std::uint64_t seed,
                                               std::vector<int>* multiplicities = nullptr);

std::vector<CentralFactor<GfElem>> factor_central(const SigmaRing& ring, const Poly<GfElem>& h, std::uint64_t seed);
/// Always throws InfiniteConstantField: F = F_q(u^p) is infinite.
std::vector<CentralFactor<RationalFunction>> factor_central(const DeltaRing& ring, const Poly<RationalFunction>& h,
                                                            std::uint64_t seed);

/// Irreducible factors with multiplicity expanded, in canonical order.
template <class K>
std::vector<CentralPolynomial<K>> expand_factors(const std::vector<CentralFactor<K>>& fs) {
    std::vector<CentralPolynomial<K>> out;
    for (const auto& f : fs)
        for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.factor);
    return out;
}

enum class Verdict { Irreducible, Reducible, Inconclusive };
enum class Route { None, Degree1, NormIrreducible, CriterionCentral, Oracle };

std::string verdict_name(Verdict v);
std::string route_name(Route r);

template <class K>
struct IrreducibilityReport {
    Verdict verdict = Verdict::Inconclusive;
    Route route = Route::None;
    int deg_h = -1;
    int m = 0;
    std::optional<CentralPolynomial<K>> norm;
    std::optional<CentralPolynomial<K>> h;
    std::string note;
};

template <class K>
struct IrreducibilityOptions {
    std::uint64_t seed = 0;
    /// A factorization of N(f) into monic irreducibles over F, checked against N(f).
    std::optional<std::vector<CentralFactor<K>>> norm_factorization;
    /// true: irreducible over F, false: reducible, nullopt: unknown.
    std::function<std::optional<bool>(const Poly<K>&)> tester;
    /// Consulted only when the norm route is inconclusive.
    std::function<bool(const SkewPolynomial<K>&)> oracle;
};

namespace detail {

template <class K>
Poly<K> product_of(const std::vector<CentralFactor<K>>& fs, const K& zero) {
    Poly<K> acc = Poly<K>::constant(one_of(zero));
    for (const auto& f : fs) acc = acc * orenorm::pow(f.factor.poly, static_cast<std::uint64_t>(f.multiplicity));
    return acc;
}

/// Factor N(f) when possible; nullopt when F is infinite and nothing was supplied.
template <class K>
std::optional<std::vector<CentralFactor<K>>> norm_factors(const RingPtr<K>& ring, const Poly<K>& monic_norm,
                                                          const IrreducibilityOptions<K>& opt) {
    if (opt.norm_factorization) {
        for (const auto& f : *opt.norm_factorization) {
            require(f.factor.poly.degree() >= 1 && f.factor.poly.lead() == ring->one && f.multiplicity >= 1,
                    ErrorKind::InvalidArgument, "supplied norm factors must be monic of positive degree");
            make_central(ring, f.factor.poly);
        }
        require(product_of(*opt.norm_factorization, ring->zero) == monic_norm, ErrorKind::InvalidArgument,
                "supplied factorization does not multiply to the norm");
        return opt.norm_factorization;
    }
    if (ring->center_field_order == 0) return std::nullopt;
    return factor_central(ring, monic_norm, opt.seed);
}

}  // namespace detail

/// Norm criterion: degree 1 is irreducible; N(f) irreducible implies f irreducible; when
/// deg ĥ = m, a reducible N(f) = ĥ forces f reducible. Otherwise inconclusive unless an
/// oracle is supplied.
template <class K>
IrreducibilityReport<K> is_irreducible(const SkewPolynomial<K>& f, const IrreducibilityOptions<K>& opt = {}) {
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "irreducibility of the zero polynomial");
    require(f.degree() >= 1, ErrorKind::InvalidArgument, "units are neither irreducible nor reducible");
    const auto& ring = f.ring();
    IrreducibilityReport<K> rep;
    rep.m = f.degree();
    if (f.degree() == 1) {
        rep.verdict = Verdict::Irreducible;
        rep.route = Route::Degree1;
        return rep;
    }
    if (ring->kind == RingKind::Sigma)
        require(gcrd_with_t(f).degree() == 0, ErrorKind::GcrdWithTNotOne,
                "t is a right factor; strip it before testing irreducibility");
    rep.norm = reduced_norm(f);
    const Poly<K> monic_norm = rep.norm->poly.monic();
    rep.h = mclm(f);
    rep.deg_h = rep.h->degree();

    std::optional<bool> norm_irreducible;
    if (auto fs = detail::norm_factors(ring, monic_norm, opt)) {
        norm_irreducible = fs->size() == 1 && fs->front().multiplicity == 1;
    } else if (opt.tester) {
        norm_irreducible = opt.tester(monic_norm);
    }
    if (norm_irreducible == true) {
        rep.verdict = Verdict::Irreducible;
        rep.route = Route::NormIrreducible;
        return rep;
    }
    if (norm_irreducible == false && rep.deg_h == rep.m) {
        rep.verdict = Verdict::Reducible;
        rep.route = Route::CriterionCentral;
        rep.note = "deg h = m and h = N(f) is reducible";
        return rep;
    }
    if (!norm_irreducible)
        rep.note = "no factorization of N(f) over the infinite constant field";
    else
        rep.note = "N(f) reducible but deg h = " + std::to_string(rep.deg_h) + " != m";
    if (opt.oracle) {
        rep.verdict = opt.oracle(f) ? Verdict::Irreducible : Verdict::Reducible;
        rep.route = Route::Oracle;
    }
    return rep;
}

template <class K>
struct FactorInfo {
    bool certified_irreducible = false;
    Route route = Route::None;
};

template <class K>
struct Factorization {
    K unit;
    std::vector<SkewPolynomial<K>> factors;
    std::vector<FactorInfo<K>> info;
    /// ĥ assigned to each factor (rough factorization only).
    std::vector<CentralPolynomial<K>> central;

    SkewPolynomial<K> product(const RingPtr<K>& ring) const {
        SkewPolynomial<K> acc = SkewPolynomial<K>::constant(ring, unit);
        for (const auto& f : factors) acc = acc * f;
        return acc;
    }
};

/// Throws Internal unless unit·f_1⋯f_l = f.
template <class K>
void certify(const SkewPolynomial<K>& f, const Factorization<K>& fac) {
    require(fac.product(f.ring()) == f, ErrorKind::Internal, "factorization does not multiply back to f");
}

template <class K>
std::string to_string(const Factorization<K>& fac) {
    std::string out;
    if (fac.unit != one_of(fac.unit)) out = to_string(fac.unit) + " * ";
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (i) out += " * ";
        out += "(" + to_string(fac.factors[i]) + ")";
    }
    return out.empty() ? to_string(fac.unit) : out;
}

/// Some monic right factor of f of degree d by exhaustive search over monic candidates;
/// BudgetExceeded if |K|^d > budget.
std::optional<SigmaPoly> search_right_factor(const SigmaPoly& f, int d, std::uint64_t budget);

/// Rough factorization: f = unit·f_1⋯f_l with mclm(f_i) = ĥ_{ordering(i)}, where ĥ_1, …, ĥ_l
/// are the irreducible factors of N(f) (with multiplicity, canonical order). An empty
/// ordering means the identity permutation.
Factorization<GfElem> rough_factorize(const SigmaPoly& f, const std::vector<std::size_t>& ordering,
                                      std::uint64_t seed, std::uint64_t budget = 1000000);

struct FactorizationSet {
    std::vector<Factorization<GfElem>> list;
    std::vector<CentralPolynomial<GfElem>> central_factors;
    /// Set when two ĥ_i coincide; `list` then holds the single identity-ordering extraction.
    bool repeated_central_factors = false;
};

/// One rough factorization per ordering of the l distinct central factors (l! in total).
FactorizationSet all_factorizations(const SigmaPoly& f, std::uint64_t seed, std::uint64_t budget = 1000000);

/// Canonical sort key of an ordered factor list.
std::string factorization_key(const Factorization<GfElem>& fac);

}  // namespace orenorm
