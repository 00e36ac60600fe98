#include "orenorm/rings.hpp"

#include <numeric>

#include "orenorm/linalg.hpp"

namespace orenorm {

std::uint64_t sigma_order(const FieldPtr& field, std::uint64_t sigma_power) {
    const std::uint64_t D = field->degree();
    const std::uint64_t j = sigma_power % D;
    return D / std::gcd(j == 0 ? D : j, D);
}

std::vector<GfElem> fixed_field_basis(const FieldPtr& field, std::uint64_t sigma_power) {
    const std::uint64_t n = sigma_order(field, sigma_power);
    const unsigned e = field->degree() / static_cast<unsigned>(n);
    const GfElem zero = field->zero();
    auto as_vector = [&](const GfElem& a) {
        std::vector<GfElem> v;
        for (auto c : field->coords(a)) v.push_back(field->element(c));
        return v;
    };
    std::vector<GfElem> basis;
    IncrementalBasis<GfElem> echelon(zero);
    auto offer = [&](const GfElem& b) {
        if (basis.size() < e && echelon.add(as_vector(b))) basis.push_back(b);
    };
    offer(field->one());
    // The trace to Fix(σ) is onto, so traces of an F_p-basis of K span the fixed field.
    std::uint64_t basis_index = 1;
    for (unsigned k = 0; k < field->degree() && basis.size() < e; ++k, basis_index *= field->characteristic()) {
        GfElem tr = zero;
        GfElem conj = field->element(basis_index);
        for (std::uint64_t i = 0; i < n; ++i) {
            tr += conj;
            conj = frobenius(conj, sigma_power);
        }
        offer(tr);
    }
    require(basis.size() == e, ErrorKind::Internal, "could not span the fixed field");
    return basis;
}

SigmaRing make_sigma_ring(const FieldPtr& field, std::uint64_t sigma_power) {
    return make_sigma_ring(field, sigma_power, field->one());
}

SigmaRing make_sigma_ring(const FieldPtr& field, std::uint64_t sigma_power, const GfElem& u) {
    require(field != nullptr, ErrorKind::InvalidRing, "missing coefficient field");
    const std::uint64_t D = field->degree();
    require(sigma_power % D != 0, ErrorKind::InvalidRing,
            "sigma is the identity on this field; the ring would be commutative");
    require(u.field() == field, ErrorKind::InvalidRing, "u must be an element of the coefficient field");
    require(!is_zero(u), ErrorKind::InvalidRing, "u must be nonzero");
    require(frobenius(u, sigma_power) == u, ErrorKind::InvalidRing, "u must be fixed by sigma");

    const std::uint64_t n = sigma_order(field, sigma_power);
    auto ring = std::make_shared<SkewRing<GfElem>>();
    ring->kind = RingKind::Sigma;
    ring->zero = field->zero();
    ring->one = field->one();
    ring->center_degree = n;
    ring->sigma_power = sigma_power % D;
    ring->u = u;
    ring->sigma_pow = [sigma_power, D](const GfElem& a, std::uint64_t k) {
        return frobenius(a, (sigma_power % D) * (k % D) % D);
    };
    ring->in_center_field = [sigma_power](const GfElem& a) { return frobenius(a, sigma_power) == a; };
    ring->flatten = [field](const GfElem& a) {
        std::vector<GfElem> v;
        for (auto c : field->coords(a)) v.push_back(field->element(c));
        return v;
    };
    ring->embed_scalar = [](const GfElem& s) { return s; };
    ring->scalar_basis = fixed_field_basis(field, sigma_power);
    for (unsigned k = 1; k <= field->depth(); ++k) ring->generators.push_back(field->generator(k));
    std::uint64_t fo = 1;
    for (std::size_t i = 0; i < ring->scalar_basis.size(); ++i) fo *= field->characteristic();
    ring->center_field_order = fo;
    ring->x_definition = "u^-1 t^n";
    ring->description = "F_" + std::to_string(field->order()) + "[t; Frob^" + std::to_string(sigma_power % D) +
                        "], n = " + std::to_string(n) + ", F = F_" + std::to_string(fo) +
                        ", u = " + to_string(u);
    return ring;
}

DeltaRing make_delta_ring(const Derivation& delta) {
    const auto ff = delta.ff();
    auto ring = std::make_shared<SkewRing<RationalFunction>>();
    const RationalFunction one = RationalFunction::constant(ff, ff->base->one());
    const RationalFunction zero = zero_of(one);
    ring->kind = RingKind::Delta;
    ring->zero = zero;
    ring->one = one;
    const auto dense = delta.min_poly_dense();
    ring->center_degree = delta.min_poly_degree();
    ring->u = one;
    ring->g_lower.assign(dense.begin(), dense.end() - 1);
    ring->sigma_pow = [](const RationalFunction& a, std::uint64_t) { return a; };
    ring->delta = [delta](const RationalFunction& a) { return delta.apply(a); };
    ring->in_center_field = [delta](const RationalFunction& a) { return delta.is_constant(a); };
    ring->flatten = [delta](const RationalFunction& a) { return delta.flatten(a); };
    ring->embed_scalar = [](const RationalFunction& s) { return s; };
    ring->scalar_basis = {one};
    ring->generators.push_back(RationalFunction::variable(ff));
    for (unsigned k = 1; k <= ff->base->depth(); ++k)
        ring->generators.push_back(RationalFunction::constant(ff, ff->base->generator(k)));
    ring->center_field_order = 0;
    ring->x_definition = "g(t)";
    ring->description = "F_" + std::to_string(ff->base->order()) + "(" + ff->var + ")[t; " + delta.describe() +
                        "], g(t) = " + format_poly(Poly<RationalFunction>(zero, dense), "t");
    return ring;
}

}  // namespace orenorm
