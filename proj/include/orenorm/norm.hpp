#pragma once

// The regular representation ρ(f) over K[x] and the reduced norm N(f) = det ρ(f).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orenorm/central.hpp"
#include "orenorm/linalg.hpp"
#include "orenorm/skew_ring.hpp"

namespace orenorm {

/// Row i holds the coefficients Q_ij(x) of tⁱf = Σ_j Q_ij(x)tʲ.
template <class K>
using RegRepMatrix = Matrix<Poly<K>>;

template <class K>
RegRepMatrix<K> build_rho(const SkewPolynomial<K>& f) {
    const std::size_t N = f.ring()->center_degree;
    RegRepMatrix<K> rho;
    rho.reserve(N);
    SkewPolynomial<K> row = f;
    for (std::size_t i = 0; i < N; ++i) {
        rho.push_back(center_rewrite(row).parts);
        if (i + 1 < N) row = row.times_t();
    }
    return rho;
}

/// deg Q_ij ≤ ⌊(m + i − j)/n⌋ for every entry of ρ(f), zero where that bound is negative.
template <class K>
bool rho_degree_bands_ok(const SkewPolynomial<K>& f, const RegRepMatrix<K>& rho) {
    const long m = f.degree();
    const long n = static_cast<long>(rho.size());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const long top = m + i - j;
            const long bound = top < 0 ? -1 : top / n;
            if (rho[i][j].degree() > bound) return false;
        }
    return true;
}

template <class K>
CentralPolynomial<K> reduced_norm(const SkewPolynomial<K>& f) {
    const auto& ring = f.ring();
    return make_central(ring, det_bareiss(build_rho(f), ring->zero));
}

/// Second, independent determinant path; nullopt when K has too few points. Evaluation
/// points come from enumeration_point(proto, i), found by argument-dependent lookup.
template <class K>
std::optional<CentralPolynomial<K>> reduced_norm_interpolated(const SkewPolynomial<K>& f) {
    const auto& ring = f.ring();
    const K proto = ring->zero;
    auto det = det_interpolated<K>(build_rho(f), ring->zero,
                                   [&proto](std::size_t i) { return enumeration_point(proto, i); });
    if (!det) return std::nullopt;
    return make_central(ring, std::move(*det));
}

/// f^♯ with N(f) = f^♯·f = f·f^♯ (both identities asserted).
template <class K>
SkewPolynomial<K> cofactor(const SkewPolynomial<K>& f) {
    const auto& ring = f.ring();
    const auto n = reduced_norm(f);
    const auto lowered = lower(ring, n.poly);
    auto [q, r] = right_divide(lowered, f);
    require(r.is_zero(), ErrorKind::NonzeroRemainder, "f does not right-divide its norm");
    require(f * q == lowered, ErrorKind::NonzeroRemainder, "f·f^# differs from the norm");
    return q;
}

/// Π_{i<n} σⁱ(a), the norm from K to Fix(σ).
template <class K>
K field_norm(const SkewRing<K>& R, const K& a) {
    K acc = R.one;
    for (std::uint64_t i = 0; i < R.center_degree; ++i) acc = acc * R.sigma_pow(a, i);
    return acc;
}

template <class K>
K signed_unit(const SkewRing<K>& R, std::uint64_t exponent) {
    return exponent % 2 == 0 ? R.one : -R.one;
}

template <class K>
struct TermReport {
    bool constant_checked = false;
    bool constant_ok = true;
    K constant_expected{};
    K constant_actual{};
    bool leading_ok = false;
    K leading_expected{};
    K leading_actual{};
    int norm_degree = -1;
    bool pass() const { return constant_ok && leading_ok; }
};

/// σ case: constant term N_{K/F}(a_0) and leading term (−1)^{m(n−1)}N_{K/F}(a_m)·u^m
/// (u^m appears because x = u⁻¹tⁿ; it is 1 for u = 1).
/// δ case: leading term (−1)^{m(p^e−1)}a_m^{p^e}; the constant term has no closed form.
template <class K>
TermReport<K> verify_term_formula(const SkewPolynomial<K>& f) {
    const auto& R = *f.ring();
    const auto n = reduced_norm(f);
    TermReport<K> rep;
    rep.norm_degree = n.degree();
    const std::uint64_t m = static_cast<std::uint64_t>(f.degree());
    const std::uint64_t N = R.center_degree;
    rep.leading_actual = n.poly.is_zero() ? R.zero : n.poly.lead();
    if (R.kind == RingKind::Sigma) {
        rep.constant_checked = true;
        rep.constant_expected = field_norm(R, f[0]);
        rep.constant_actual = n.poly[0];
        rep.constant_ok = rep.constant_expected == rep.constant_actual;
        K um = R.one;
        for (std::uint64_t i = 0; i < m; ++i) um = um * R.u;
        rep.leading_expected = signed_unit(R, m * (N - 1)) * field_norm(R, f.lead()) * um;
    } else {
        K lead_pow = R.one;
        for (std::uint64_t i = 0; i < N; ++i) lead_pow = lead_pow * f.lead();
        rep.leading_expected = signed_unit(R, m * (N - 1)) * lead_pow;
    }
    rep.leading_ok = rep.norm_degree == static_cast<int>(m) && rep.leading_expected == rep.leading_actual;
    return rep;
}

template <class K>
std::string format_matrix(const RegRepMatrix<K>& m) {
    std::string out;
    for (const auto& row : m) {
        out += "[";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ", ";
            out += format_poly(row[j], "x");
        }
        out += "]\n";
    }
    return out;
}

}  // namespace orenorm
