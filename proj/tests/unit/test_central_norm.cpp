#include <doctest.h>

#include "fixtures.hpp"
#include "orenorm/central.hpp"
#include "orenorm/norm.hpp"

using namespace fx;

namespace {

Poly<GfElem> xp(const FieldPtr& F, std::vector<GfElem> c) { return Poly<GfElem>(F->zero(), std::move(c)); }

Poly<RationalFunction> xr(const DeltaRing& D, std::vector<RationalFunction> c) {
    return Poly<RationalFunction>(D->zero, std::move(c));
}

template <class K>
SkewPolynomial<K> reassemble(const RingPtr<K>& ring, const CenterRewrite<K>& rw) {
    SkewPolynomial<K> acc(ring);
    for (std::size_t i = 0; i < rw.parts.size(); ++i)
        acc += lower(ring, rw.parts[i]) * SkewPolynomial<K>::monomial(ring, ring->one, i);
    return acc;
}

// Every monic polynomial over F_2 of degree < bound, as coefficient vectors.
std::vector<Poly<GfElem>> monic_f2_below(const FieldPtr& F, int bound) {
    std::vector<Poly<GfElem>> out;
    for (int d = 0; d < bound; ++d)
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            Poly<GfElem> p = Poly<GfElem>::monomial(F->one(), d);
            for (int i = 0; i < d; ++i)
                if (mask >> i & 1) p.set(i, F->one());
            out.push_back(p);
        }
    return out;
}

}  // namespace

TEST_CASE("center rewrite") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    const auto f = sp(R, {one, one, gg, one});
    const auto rw = center_rewrite(f);
    REQUIRE(rw.parts.size() == 2);
    CHECK(rw.parts[0] == xp(F, {one, gg}));
    CHECK(rw.parts[1] == xp(F, {one, one}));
    CHECK(rw.k == 1);
    CHECK(rw.r == 1);
    CHECK(reassemble(R, rw) == f);

    const auto c = center_rewrite(SigmaPoly::constant(R, gg));
    CHECK(c.parts[0] == xp(F, {gg}));
    CHECK(c.parts[1].is_zero());

    const auto D = d_du_f3();
    const auto rd = center_rewrite(DeltaPoly::monomial(D, D->one, 5));
    REQUIRE(rd.parts.size() == 3);
    CHECK(rd.parts[0].is_zero());
    CHECK(rd.parts[1].is_zero());
    CHECK(rd.parts[2] == xr(D, {D->zero, D->one}));
}

TEST_CASE("center rewrite round trip and degree bands") {
    std::mt19937_64 rng(99);
    for (const auto& R : {ring_f4(), ring_f8(), ring_f9(), make_sigma_ring(f9(), 1, el(f9(), 2))}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_sigma(R, 1 + static_cast<int>(rng() % 8), rng);
            const auto rw = center_rewrite(f);
            CHECK(reassemble(R, rw) == f);
            for (int i = 0; i < static_cast<int>(rw.parts.size()); ++i)
                CHECK(rw.parts[i].degree() <= (i <= rw.r ? rw.k : rw.k - 1));
            CHECK(rw.parts[rw.r].degree() == rw.k);
        }
    }
    for (const auto& D : {d_du_f3(), cu_du_f25()}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_delta(D, static_cast<int>(rng() % 9), rng, 1);
            CHECK(reassemble(D, center_rewrite(f)) == f);
        }
    }
}

TEST_CASE("mclm, bound and the degree criterion") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    CHECK(mclm(sp(R, {gg, one})).poly == xp(F, {one, one}));
    CHECK(mclm(sp(R, {one, zero, one})).poly == xp(F, {one, one}));
    CHECK(mclm(sp(R, {gg, zero, one})).poly == xp(F, {one, one, one}));
    CHECK(bound(sp(R, {gg, zero, one})).poly == xp(F, {one, one, one}));
    CHECK(mclm(sp(R, {gg, one})).x_def == "u^-1 t^n");
    CHECK(mclm(SigmaPoly::constant(R, gg)).poly == xp(F, {one}));

    try {
        (void)mclm(sp(R, {zero, one, one}));
        FAIL("expected GcrdWithTNotOne");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GcrdWithTNotOne);
    }

    auto rep = criterion_degree_check(sp(R, {gg, zero, one}));
    CHECK(rep.deg_h == 2);
    CHECK(rep.applies);
    CHECK(rep.sufficient_condition == "n prime");
    rep = criterion_degree_check(sp(R, {one, zero, one}));
    CHECK(rep.deg_h == 1);
    CHECK_FALSE(rep.applies);
    rep = criterion_degree_check(sp(R, {gg, one}));
    CHECK(rep.deg_h == 1);
    CHECK(rep.applies);

    const auto R4 = make_sigma_ring(GaloisField::make(2, {{1, 1, 0, 0, 1}}), 1);  // F_16, n = 4
    rep = criterion_degree_check(SigmaPoly::monomial(R4, R4->one, 2) + SigmaPoly::constant(R4, R4->zero.field()->generator()));
    CHECK(rep.sufficient_condition == "neither; verified directly");
}

TEST_CASE("mclm properties on random samples") {
    std::mt19937_64 rng(4242);
    for (const auto& R : {ring_f4(), ring_f8(), ring_f9(), make_sigma_ring(f9(), 1, el(f9(), 2))}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto f = random_sigma(R, 1 + static_cast<int>(rng() % 5), rng, false, true);
            const auto h = mclm(f);
            CHECK(h.poly.lead() == R->one);
            CHECK(right_remainder(lower(R, h.poly), f).is_zero());
            CHECK(h.degree() <= static_cast<int>(R->center_degree) * f.degree());
            CHECK(h.degree() >= 1);
            CHECK(extract_central(lower(R, h.poly)).poly == h.poly);
            // bound divides the norm
            const auto N = reduced_norm(f);
            CHECK((N.poly % h.poly).is_zero());
        }
    }
    // Exhaustive minimality over F_4: no monic central polynomial of smaller degree is a left multiple.
    const auto R = ring_f4();
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_sigma(R, 1 + static_cast<int>(rng() % 3), rng, false, true);
        const auto h = mclm(f);
        for (const auto& cand : monic_f2_below(f4(), h.degree()))
            CHECK_FALSE(right_remainder(lower(R, cand), f).is_zero());
    }
    for (const auto& D : {d_du_f3(), cu_du_f25()}) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto f = random_delta(D, 1 + static_cast<int>(rng() % 2), rng, 1);
            const auto h = mclm(f);
            CHECK(right_remainder(lower(D, h.poly), f).is_zero());
            CHECK(h.degree() <= static_cast<int>(D->center_degree) * f.degree());
            CHECK((reduced_norm(f).poly % h.poly).is_zero());
        }
    }
}

TEST_CASE("regular representation and reduced norm examples") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    const auto rho = build_rho(sp(R, {gg, one}));
    REQUIRE(rho.size() == 2);
    CHECK(rho[0][0] == xp(F, {gg}));
    CHECK(rho[0][1] == xp(F, {one}));
    CHECK(rho[1][0] == xp(F, {zero, one}));
    CHECK(rho[1][1] == xp(F, {gg * gg}));

    const auto rc = build_rho(SigmaPoly::constant(ring_f8(), g(f8())));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(rc[i][j] == (i == j ? xp(f8(), {frobenius(g(f8()), i)}) : xp(f8(), {})));

    CHECK(reduced_norm(sp(R, {gg, one})).poly == xp(F, {one, one}));
    CHECK(reduced_norm(sp(R, {gg, zero, one})).poly == xp(F, {one, one, one}));

    const auto D = d_du_f3();
    const auto u = RationalFunction::variable(D->zero.ff());
    const auto f = DeltaPoly(D, {u, D->zero, D->zero, D->one});
    CHECK(reduced_norm(f).poly == xr(D, {u.pow(3), D->zero, D->zero, D->one}));
    CHECK(reduced_norm(f).x_def == "g(t)");

    CHECK(cofactor(sp(R, {gg, one})) == sp(R, {gg + one, one}));
    CHECK(cofactor(sp(R, {one, zero, one})) == sp(R, {one, zero, one}));
    CHECK(reduced_norm(sp(R, {one, zero, one})).poly == xp(F, {one, zero, one}));
    CHECK(cofactor(SigmaPoly::constant(R, one)) == SigmaPoly::constant(R, one));
    CHECK(reduced_norm(SigmaPoly::constant(R, one)).poly == xp(F, {one}));

    CHECK(verify_term_formula(sp(R, {gg, one})).pass());
    CHECK(verify_term_formula(SigmaPoly::constant(R, gg)).pass());
    const auto tr = verify_term_formula(SigmaPoly::t(R));
    CHECK(tr.pass());
    CHECK(reduced_norm(SigmaPoly::t(R)).poly == xp(F, {zero, one}));
}

TEST_CASE("norm properties on random samples") {
    std::mt19937_64 rng(777);
    for (const auto& R : {ring_f4(), ring_f8(), ring_f9(), make_sigma_ring(f25(), 1, el(f25(), 2)),
                          make_sigma_ring(f9(), 1, el(f9(), 2))}) {
        for (int trial = 0; trial < 80; ++trial) {
            const auto f = random_sigma(R, static_cast<int>(rng() % 6), rng);
            const auto h = random_sigma(R, static_cast<int>(rng() % 5), rng);
            const auto N = reduced_norm(f);
            CHECK(N.degree() == f.degree());
            CHECK(verify_term_formula(f).pass());
            CHECK(reduced_norm(f * h).poly == N.poly * reduced_norm(h).poly);
            CHECK(build_rho(f * h) == mat_mul(build_rho(f), build_rho(h), R->zero));
            const auto fs = cofactor(f);
            CHECK(fs * f == lower(R, N.poly));
        }
    }
    for (const auto& R : {make_sigma_ring(f25(), 1), ring_f9()}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto f = random_sigma(R, static_cast<int>(rng() % 4), rng);
            const auto alt = reduced_norm_interpolated(f);
            REQUIRE(alt.has_value());
            CHECK(alt->poly == reduced_norm(f).poly);
        }
    }
    for (const auto& D : {d_du_f3(), cu_du_f25()}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_delta(D, static_cast<int>(rng() % 3), rng, 1);
            const auto h = random_delta(D, static_cast<int>(rng() % 2), rng, 1);
            const auto N = reduced_norm(f);
            CHECK(N.degree() == f.degree());
            CHECK(verify_term_formula(f).pass());
            CHECK(reduced_norm(f * h).poly == N.poly * reduced_norm(h).poly);
            CHECK(build_rho(f * h) == mat_mul(build_rho(f), build_rho(h), D->zero));
            CHECK(cofactor(f) * f == lower(D, N.poly));
            const auto alt = reduced_norm_interpolated(f);
            REQUIRE(alt.has_value());
            CHECK(alt->poly == N.poly);
        }
    }
}

TEST_CASE("norm of g(t) + a is (x + a)^(p^e)") {
    std::mt19937_64 rng(31337);
    for (const auto& D : {d_du_f3(), cu_du_f25()}) {
        const auto x = central_x(D);
        const std::uint64_t N = D->center_degree;
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_rf(D->zero.ff(), rng, 2);
            const auto n = reduced_norm(x + DeltaPoly::constant(D, a));
            CHECK(n.poly == orenorm::pow(xr(D, {a, D->one}), N));
        }
    }
}
