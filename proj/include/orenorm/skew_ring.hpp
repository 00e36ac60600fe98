#pragma once

// The skew polynomial ring K[t; σ, δ] with t·a = σ(a)·t + δ(a), generic over the
// coefficient type K. Exactly one of σ ≠ id (RingKind::Sigma) and δ ≠ 0
// (RingKind::Delta) holds; ring descriptors are built by rings.hpp and
// cyclic_algebra.hpp.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orenorm/errors.hpp"
#include "orenorm/poly.hpp"

namespace orenorm {

/// Scalar type used to flatten K over the center field F for linear algebra.
template <class K>
struct ScalarOf;

enum class RingKind { Sigma, Delta };

template <class K>
struct SkewRing {
    using Scalar = typename ScalarOf<K>::type;

    RingKind kind = RingKind::Sigma;
    K zero;
    K one;
    /// n (order of σ) or p^e (degree of the minimum polynomial of δ).
    std::uint64_t center_degree = 1;
    /// σ = Frobenius^sigma_power on a finite coefficient field; 0 otherwise.
    std::uint64_t sigma_power = 0;
    /// Central unit in x = u⁻¹tⁿ; one in the δ case.
    K u;
    /// δ case: g(t) = t^N + Σ g_lower[i]·tⁱ and x = g(t).
    std::vector<K> g_lower;
    std::function<K(const K&, std::uint64_t)> sigma_pow;
    std::function<K(const K&)> delta;
    std::function<bool(const K&)> in_center_field;
    /// Coordinates over the scalar field S ⊆ F; `scalar_basis` spans F over S.
    std::function<std::vector<Scalar>(const K&)> flatten;
    std::function<K(const Scalar&)> embed_scalar;
    std::vector<K> scalar_basis;
    /// Generate K as a ring over its prime field, used by the right-invariance test.
    std::vector<K> generators;
    /// |F| for a finite center field, 0 when F is infinite.
    std::uint64_t center_field_order = 0;
    std::string x_definition;
    std::string description;
};

template <class K>
using RingPtr = std::shared_ptr<const SkewRing<K>>;

template <class K>
class SkewPolynomial {
   public:
    SkewPolynomial() = default;
    explicit SkewPolynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}
    SkewPolynomial(RingPtr<K> ring, std::vector<K> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        trim();
    }

    static SkewPolynomial constant(RingPtr<K> ring, const K& c) { return SkewPolynomial(std::move(ring), {c}); }
    static SkewPolynomial monomial(RingPtr<K> ring, const K& c, std::size_t k) {
        std::vector<K> v(k + 1, ring->zero);
        v[k] = c;
        return SkewPolynomial(std::move(ring), std::move(v));
    }
    static SkewPolynomial t(RingPtr<K> ring) {
        const K one = ring->one;
        return monomial(std::move(ring), one, 1);
    }

    const RingPtr<K>& ring() const noexcept { return ring_; }
    const std::vector<K>& coeffs() const noexcept { return c_; }
    /// −1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const K& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero; }
    const K& lead() const {
        require(!c_.empty(), ErrorKind::DivisionByZeroPolynomial, "leading coefficient of zero polynomial");
        return c_.back();
    }

    SkewPolynomial operator-() const {
        SkewPolynomial r(ring_);
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }
    SkewPolynomial& operator+=(const SkewPolynomial& o) {
        check_same(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_->zero);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    SkewPolynomial& operator-=(const SkewPolynomial& o) {
        check_same(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_->zero);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend SkewPolynomial operator+(SkewPolynomial a, const SkewPolynomial& b) { return a += b; }
    friend SkewPolynomial operator-(SkewPolynomial a, const SkewPolynomial& b) { return a -= b; }

    /// t·f
    SkewPolynomial times_t() const {
        SkewPolynomial r(ring_);
        if (c_.empty()) return r;
        r.c_.assign(c_.size() + 1, ring_->zero);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            r.c_[j + 1] = r.c_[j + 1] + ring_->sigma_pow(c_[j], 1);
            if (ring_->delta) r.c_[j] = r.c_[j] + ring_->delta(c_[j]);
        }
        r.trim();
        return r;
    }

    /// Left scalar multiple c·f.
    SkewPolynomial scaled(const K& c) const {
        SkewPolynomial r(ring_);
        for (const auto& a : c_) r.c_.push_back(c * a);
        r.trim();
        return r;
    }

    friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
        f.check_same(g);
        SkewPolynomial r(f.ring_);
        if (f.is_zero() || g.is_zero()) return r;
        const auto& R = *f.ring_;
        if (!R.delta) {
            r.c_.assign(f.c_.size() + g.c_.size() - 1, R.zero);
            for (std::size_t i = 0; i < f.c_.size(); ++i) {
                if (detail::coeff_is_zero(f.c_[i])) continue;
                for (std::size_t j = 0; j < g.c_.size(); ++j)
                    r.c_[i + j] = r.c_[i + j] + f.c_[i] * R.sigma_pow(g.c_[j], i);
            }
            r.trim();
            return r;
        }
        SkewPolynomial tig = g;  // tⁱ·g
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (!detail::coeff_is_zero(f.c_[i])) r += tig.scaled(f.c_[i]);
            if (i + 1 < f.c_.size()) tig = tig.times_t();
        }
        return r;
    }
    SkewPolynomial& operator*=(const SkewPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const SkewPolynomial& a, const SkewPolynomial& b) { return !(a == b); }

    bool is_monic() const { return !c_.empty() && c_.back() == ring_->one; }
    /// lead⁻¹·f
    SkewPolynomial monic() const {
        if (c_.empty()) return *this;
        return scaled(inverse(c_.back()));
    }

    void check_same(const SkewPolynomial& o) const {
        require(ring_ && ring_ == o.ring_, ErrorKind::RingMismatch, "skew polynomials from different rings");
    }

   private:
    RingPtr<K> ring_;
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
};

template <class K>
std::string to_string(const SkewPolynomial<K>& f) {
    if (f.is_zero()) return "0";
    return format_poly(Poly<K>(f.ring()->zero, f.coeffs()), "t");
}

/// f = q·g + r with deg r < deg g. Requires an invertible leading coefficient of g.
template <class K>
std::pair<SkewPolynomial<K>, SkewPolynomial<K>> right_divide(const SkewPolynomial<K>& f, const SkewPolynomial<K>& g) {
    f.check_same(g);
    require(!g.is_zero(), ErrorKind::DivisionByZeroPolynomial, "right division by the zero polynomial");
    const auto& ring = f.ring();
    const auto& R = *ring;
    SkewPolynomial<K> rem = f;
    if (f.degree() < g.degree()) return {SkewPolynomial<K>(ring), rem};
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const std::size_t span = static_cast<std::size_t>(f.degree()) - dg;
    std::vector<SkewPolynomial<K>> tk_g{g};  // t^k·g
    for (std::size_t k = 1; k <= span; ++k) tk_g.push_back(tk_g.back().times_t());
    std::vector<K> q(span + 1, R.zero);
    while (rem.degree() >= g.degree()) {
        const std::size_t k = static_cast<std::size_t>(rem.degree()) - dg;
        const K c = rem.lead() * inverse(R.sigma_pow(g.lead(), k));
        q[k] = q[k] + c;
        const int before = rem.degree();
        rem -= tk_g[k].scaled(c);
        require(rem.degree() < before, ErrorKind::Internal, "right division failed to cancel the leading term");
    }
    return {SkewPolynomial<K>(ring, std::move(q)), rem};
}

template <class K>
SkewPolynomial<K> right_remainder(const SkewPolynomial<K>& f, const SkewPolynomial<K>& g) {
    return right_divide(f, g).second;
}

/// Monic greatest common right divisor (zero if both inputs are zero).
template <class K>
SkewPolynomial<K> gcrd(SkewPolynomial<K> a, SkewPolynomial<K> b) {
    a.check_same(b);
    while (!b.is_zero()) {
        auto r = right_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic least common left multiple, via the extended right Euclidean algorithm.
template <class K>
SkewPolynomial<K> lclm(const SkewPolynomial<K>& f, const SkewPolynomial<K>& g) {
    f.check_same(g);
    require(!f.is_zero() && !g.is_zero(), ErrorKind::DivisionByZeroPolynomial, "lclm with the zero polynomial");
    const auto& ring = f.ring();
    SkewPolynomial<K> r0 = f, r1 = g;
    SkewPolynomial<K> s0 = SkewPolynomial<K>::constant(ring, ring->one), s1(ring);
    while (!r1.is_zero()) {
        auto [q, r] = right_divide(r0, r1);
        auto s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    return (s1 * f).monic();
}

template <class K>
SkewPolynomial<K> gcrd_with_t(const SkewPolynomial<K>& f) {
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "gcrd_with_t of the zero polynomial");
    return gcrd(f, SkewPolynomial<K>::t(f.ring()));
}

/// f = f'·t^k with gcrd(f', t) = 1.
template <class K>
std::pair<SkewPolynomial<K>, std::size_t> strip_t_factor(SkewPolynomial<K> f) {
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "strip_t_factor of the zero polynomial");
    const auto t = SkewPolynomial<K>::t(f.ring());
    std::size_t k = 0;
    while (detail::coeff_is_zero(f[0])) {
        auto [q, r] = right_divide(f, t);
        require(r.is_zero(), ErrorKind::Internal, "t failed to divide a polynomial with zero constant term");
        f = std::move(q);
        ++k;
    }
    return {f, k};
}

/// Rf is two-sided iff f·t and f·b (b over the generators of K) lie in Rf.
template <class K>
bool is_right_invariant(const SkewPolynomial<K>& f) {
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "right invariance of the zero polynomial");
    const auto& ring = f.ring();
    if (!right_remainder(f * SkewPolynomial<K>::t(ring), f).is_zero()) return false;
    for (const auto& b : ring->generators)
        if (!right_remainder(f * SkewPolynomial<K>::constant(ring, b), f).is_zero()) return false;
    return true;
}

/// The central variable x as an element of R: u⁻¹tⁿ or g(t).
template <class K>
SkewPolynomial<K> central_x(const RingPtr<K>& ring) {
    const auto& R = *ring;
    if (R.kind == RingKind::Sigma) return SkewPolynomial<K>::monomial(ring, inverse(R.u), R.center_degree);
    std::vector<K> c = R.g_lower;
    c.resize(R.center_degree + 1, R.zero);
    c[R.center_degree] = R.one;
    return SkewPolynomial<K>(ring, std::move(c));
}

/// ĥ(x) with x replaced by its definition in R.
template <class K>
SkewPolynomial<K> lower(const RingPtr<K>& ring, const Poly<K>& h) {
    const auto X = central_x(ring);
    SkewPolynomial<K> acc(ring);
    for (std::size_t k = h.size(); k-- > 0;) acc = acc * X + SkewPolynomial<K>::constant(ring, h[k]);
    return acc;
}

}  // namespace orenorm
