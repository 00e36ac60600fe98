#pragma once

#include <random>
#include <vector>

#include "orenorm/function_field.hpp"
#include "orenorm/galois_field.hpp"
#include "orenorm/rings.hpp"

namespace fx {

using namespace orenorm;

// Pinned moduli used throughout the tests.
inline FieldPtr f4() {
    static const FieldPtr f = GaloisField::make(2, {{1, 1, 1}});  // g^2 + g + 1
    return f;
}
inline FieldPtr f8() {
    static const FieldPtr f = GaloisField::make(2, {{1, 1, 0, 1}});  // g^3 + g + 1
    return f;
}
inline FieldPtr f9() {
    static const FieldPtr f = GaloisField::make(3, {{2, 2, 1}});  // g^2 - g - 1
    return f;
}
inline FieldPtr f25() {
    static const FieldPtr f = GaloisField::make(5, {{2, 0, 1}});  // g^2 + 2, so g^4 = -1
    return f;
}
inline FieldPtr f3() {
    static const FieldPtr f = GaloisField::prime(3);
    return f;
}

inline GfElem el(const FieldPtr& f, std::uint64_t i) { return f->element(i); }
inline GfElem g(const FieldPtr& f) { return f->generator(); }

inline SigmaPoly sp(const SigmaRing& r, std::vector<GfElem> c) { return SigmaPoly(r, std::move(c)); }


inline GfElem random_elem(const FieldPtr& f, std::mt19937_64& rng, bool nonzero = false) {
    if (nonzero) return f->element(1 + rng() % (f->order() - 1));
    return f->element(rng() % f->order());
}

/// Random polynomial of exact degree `deg`.
inline SigmaPoly random_sigma(const SigmaRing& r, int deg, std::mt19937_64& rng, bool monic = false,
                              bool unit_constant = false) {
    const auto& F = r->zero.field();
    std::vector<GfElem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_elem(F, rng, i == deg));
    if (monic) c.back() = F->one();
    if (unit_constant && deg > 0 && is_zero(c[0])) c[0] = F->one();
    return SigmaPoly(r, c);
}

inline RationalFunction random_rf(const FunctionFieldPtr& ff, std::mt19937_64& rng, int max_deg, bool nonzero = false) {
    const auto& F = ff->base;
    for (;;) {
        Poly<GfElem> num(F->zero()), den(F->zero());
        const int dn = static_cast<int>(rng() % (max_deg + 1));
        const int dd = static_cast<int>(rng() % (max_deg + 1));
        for (int i = 0; i <= dn; ++i) num.set(i, F->element(rng() % F->order()));
        for (int i = 0; i < dd; ++i) den.set(i, F->element(rng() % F->order()));
        den.set(dd, F->one());
        RationalFunction r(ff, num, den);
        if (!nonzero || !is_zero(r)) return r;
    }
}

inline DeltaPoly random_delta(const DeltaRing& r, int deg, std::mt19937_64& rng, int coeff_deg = 2) {
    const auto& ff = r->zero.ff();
    std::vector<RationalFunction> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rf(ff, rng, coeff_deg, i == deg));
    return DeltaPoly(r, c);
}

inline DeltaRing d_du_f3() {
    static const DeltaRing r = [] {
        const auto ff = make_function_field(f3());
        return make_delta_ring(Derivation::make(one_of(RationalFunction::variable(ff))));
    }();
    return r;
}

inline DeltaRing cu_du_f25() {
    static const DeltaRing r = [] {
        const auto ff = make_function_field(f25());
        const auto u = RationalFunction::variable(ff);
        return make_delta_ring(Derivation::make(RationalFunction::constant(ff, f25()->generator()) * u));
    }();
    return r;
}

inline SigmaRing ring_f4() {
    static const SigmaRing r = make_sigma_ring(f4(), 1);
    return r;
}
inline SigmaRing ring_f8() {
    static const SigmaRing r = make_sigma_ring(f8(), 1);
    return r;
}
inline SigmaRing ring_f9() {
    static const SigmaRing r = make_sigma_ring(f9(), 1);
    return r;
}

}  // namespace fx
