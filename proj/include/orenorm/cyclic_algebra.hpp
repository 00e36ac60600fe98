#pragma once

// Split cyclic algebras A = (E/C, γ, a) over finite fields, the skew ring A[t;σ], the
// representation ω: A → M_d(E) and the norm det(ω∘ρ(f)) ∈ F[x].
//
// Tower: F = F_q ⊂ C = F_{q^n} ⊂ E = F_{q^{nd}} with gcd(n, d) = 1, γ = Frobenius_q^n
// (generating Gal(E/C)) and σ = Frobenius_q^d (order n, commuting with γ, fixing z).
// Only prime q is supported.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orenorm/central.hpp"
#include "orenorm/galois_field.hpp"
#include "orenorm/linalg.hpp"
#include "orenorm/norm.hpp"
#include "orenorm/rings.hpp"

namespace orenorm {

struct CyclicAlgebraSpec {
    std::uint64_t q = 2;
    std::uint64_t n = 3;
    std::uint64_t d = 2;
    std::uint64_t a = 1;
    std::uint64_t u = 1;
};

class CyclicAlgebra;
using AlgebraPtr = std::shared_ptr<const CyclicAlgebra>;

class CyclicAlgebra {
   public:
    /// Validates the parameters (InvalidAlgebra) and builds the tower.
    static AlgebraPtr make(const CyclicAlgebraSpec& spec);

    const CyclicAlgebraSpec& spec() const noexcept { return spec_; }
    std::uint64_t q() const noexcept { return spec_.q; }
    std::uint64_t n() const noexcept { return spec_.n; }
    std::uint64_t d() const noexcept { return spec_.d; }
    const FieldPtr& E() const noexcept { return E_; }
    /// C as a field object; its elements are level 1 of E.
    FieldPtr C() const { return E_->level(1); }
    const GfElem& a() const noexcept { return a_; }
    const GfElem& u() const noexcept { return u_; }

    GfElem gamma(const GfElem& e, std::uint64_t k = 1) const;
    GfElem sigma(const GfElem& e, std::uint64_t k = 1) const;
    bool in_C(const GfElem& e) const { return E_->in_level(e, 1); }
    bool in_F(const GfElem& e) const { return E_->in_level(e, 0); }
    std::string describe() const;

   private:
    CyclicAlgebraSpec spec_;
    FieldPtr E_;
    GfElem a_;
    GfElem u_;
};

/// Σ e_i zⁱ with z·e = γ(e)·z and z^d = a.
class AlgebraElement {
   public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr alg, std::vector<GfElem> e);

    static AlgebraElement from_E(AlgebraPtr alg, const GfElem& e);
    static AlgebraElement z(AlgebraPtr alg);

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const std::vector<GfElem>& coords() const noexcept { return e_; }
    const GfElem& operator[](std::size_t i) const { return e_[i]; }
    /// True iff the element lies in E (no z terms).
    bool in_E() const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.e_ == y.e_; }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

   private:
    AlgebraPtr alg_;
    std::vector<GfElem> e_;

    void check_same(const AlgebraElement& o) const;
};

bool is_zero(const AlgebraElement& x) noexcept;
AlgebraElement zero_of(const AlgebraElement& x);
AlgebraElement one_of(const AlgebraElement& x);
/// DivisionByZero if x is not a unit (the algebra is split, so nonzero zero divisors exist).
AlgebraElement inverse(const AlgebraElement& x);
std::string to_string(const AlgebraElement& x);

/// Row i holds the E-coordinates of zⁱ·x, so ω(xy) = ω(x)ω(y) and ω(e) = diag(e, γ(e), …).
Matrix<GfElem> omega(const AlgebraElement& x);

template <>
struct ScalarOf<AlgebraElement> {
    using type = GfElem;
};

using AlgebraRing = RingPtr<AlgebraElement>;
using AlgebraPoly = SkewPolynomial<AlgebraElement>;

/// A[t;σ] with x = u⁻¹tⁿ; the center field is F_q.
AlgebraRing make_algebra_ring(const AlgebraPtr& alg);

/// The dn×dn matrix ω∘ρ(f) over E[x].
Matrix<Poly<GfElem>> omega_rho(const AlgebraPoly& f);
/// det ω∘ρ(f), asserted to lie in F_q[x] (NormNotCentral otherwise).
CentralPolynomial<GfElem> algebra_norm(const AlgebraPoly& f);

struct DegreeReport {
    int expected = 0;
    int actual = -1;
    bool pass() const { return expected == actual; }
};
DegreeReport verify_degree_dm(const AlgebraPoly& f);

/// f ∈ E[t;σ], m = kn + r. Checks the constant term N_{E/F}(a_0) and the leading term in
/// two forms: the stated (−1)^{dr(n−1)}N_{E/F}(a_m)N_{E/C}(u)^r, and the form with
/// N_{E/C}(u)^m that x = u⁻¹tⁿ produces. They agree whenever N_{E/C}(u)^{kn} = 1.
struct CoefficientReport {
    int m = 0, k = 0, r = 0;
    GfElem constant_expected, constant_actual;
    GfElem leading_actual, leading_stated, leading_full;
    bool constant_ok = false;
    bool stated_ok = false;
    bool full_ok = false;
    bool pass() const { return constant_ok && stated_ok; }
};
CoefficientReport verify_E_coefficient_formula(const AlgebraPoly& f);

struct DividesReport {
    bool ok = false;
    AlgebraPoly cofactor;
};
/// Right-divides N(f), lowered into A[t;σ], by f; requires a unit leading coefficient.
DividesReport verify_divides(const AlgebraPoly& f);

/// f ∈ C[t;σ]: N(f) is the d-th power of the norm computed in the field subring C[t;σ],
/// hence reducible with at least d irreducible factors when d ≥ 2 and m ≥ 1.
struct SubringPowerReport {
    bool coefficients_in_C = false;
    bool dth_power_ok = false;
    Poly<GfElem> norm;
    Poly<GfElem> subring_norm;
    bool reducible = false;
    int predicted_min_factors = 0;
};
SubringPowerReport field_coefficient_reducibility(const AlgebraPoly& f);

}  // namespace orenorm
