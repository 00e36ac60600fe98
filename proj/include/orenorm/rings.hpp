#pragma once

#include <cstdint>

#include "orenorm/function_field.hpp"
#include "orenorm/galois_field.hpp"
#include "orenorm/skew_ring.hpp"

namespace orenorm {

template <>
struct ScalarOf<GfElem> {
    using type = GfElem;
};
template <>
struct ScalarOf<RationalFunction> {
    using type = RationalFunction;
};

using SigmaRing = RingPtr<GfElem>;
using DeltaRing = RingPtr<RationalFunction>;
using SigmaPoly = SkewPolynomial<GfElem>;
using DeltaPoly = SkewPolynomial<RationalFunction>;

/// K[t;σ] with σ = Frobenius^sigma_power (a ↦ a^{p^sigma_power}) and x = u⁻¹tⁿ.
/// u defaults to 1 and must be a nonzero element of Fix(σ).
SigmaRing make_sigma_ring(const FieldPtr& field, std::uint64_t sigma_power);
SigmaRing make_sigma_ring(const FieldPtr& field, std::uint64_t sigma_power, const GfElem& u);

/// K[t;δ] over K = F_q(u) with x = g(t), g the minimum polynomial of δ.
DeltaRing make_delta_ring(const Derivation& delta);

/// F_p-basis of Fix(Frobenius^sigma_power) inside `field`, starting with 1.
std::vector<GfElem> fixed_field_basis(const FieldPtr& field, std::uint64_t sigma_power);

/// Order n of σ = Frobenius^sigma_power on `field`.
std::uint64_t sigma_order(const FieldPtr& field, std::uint64_t sigma_power);

}  // namespace orenorm
