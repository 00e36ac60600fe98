#include <doctest.h>

#include "fixtures.hpp"

using namespace fx;

namespace {

DeltaPoly dp(const DeltaRing& r, std::vector<RationalFunction> c) { return DeltaPoly(r, std::move(c)); }

RationalFunction u_of(const DeltaRing& r) { return RationalFunction::variable(r->zero.ff()); }

}  // namespace

TEST_CASE("skew multiplication follows the commutation rule") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    const auto t = SigmaPoly::t(R);
    CHECK(t * SigmaPoly::constant(R, gg) == sp(R, {zero, gg + one}));
    const auto t1 = sp(R, {one, one});
    CHECK(t1 * t1 == sp(R, {one, zero, one}));

    const auto D = d_du_f3();
    const auto u = u_of(D);
    const auto td = DeltaPoly::t(D);
    CHECK(td * DeltaPoly::constant(D, u) == dp(D, {D->one, u}));

    SigmaPoly other = SigmaPoly::t(ring_f9());
    CHECK_THROWS_AS(t * other, Error);
    try {
        (void)(t + other);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RingMismatch);
    }
}

TEST_CASE("right division examples") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    const auto f = sp(R, {one, zero, one});
    {
        auto [q, r] = right_divide(f, sp(R, {one, one}));
        CHECK(q == sp(R, {one, one}));
        CHECK(r.is_zero());
    }
    {
        auto [q, r] = right_divide(f, sp(R, {gg, one}));
        CHECK(q == sp(R, {gg + one, one}));
        CHECK(r.is_zero());
    }
    {
        auto [q, r] = right_divide(sp(R, {one, one}), SigmaPoly::monomial(R, one, 2));
        CHECK(q.is_zero());
        CHECK(r == sp(R, {one, one}));
    }
    CHECK_THROWS_AS(right_divide(f, SigmaPoly(R)), Error);
}

TEST_CASE("gcrd, lclm and t-factors") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    const auto f = sp(R, {one, zero, one});
    CHECK(gcrd(f, sp(R, {one, one})) == sp(R, {one, one}));
    const auto h = sp(R, {gg, one, gg});
    CHECK(gcrd(h, h) == h.monic());
    CHECK(lclm(sp(R, {one, one}), sp(R, {one, one})) == sp(R, {one, one}));

    CHECK(gcrd_with_t(f) == SigmaPoly::constant(R, one));
    CHECK(gcrd_with_t(sp(R, {zero, one, one})) == SigmaPoly::t(R));
    CHECK(gcrd_with_t(sp(R, {gg, one})) == SigmaPoly::constant(R, one));

    CHECK(is_right_invariant(f));
    CHECK_FALSE(is_right_invariant(sp(R, {gg, one})));
    CHECK(is_right_invariant(SigmaPoly::t(R)));

    {
        auto [fp, k] = strip_t_factor(sp(R, {zero, one, zero, one}));
        CHECK(fp == f);
        CHECK(k == 1);
    }
    {
        auto [fp, k] = strip_t_factor(sp(R, {gg, one}));
        CHECK(fp == sp(R, {gg, one}));
        CHECK(k == 0);
    }
    {
        auto [fp, k] = strip_t_factor(SigmaPoly::monomial(R, one, 2));
        CHECK(fp == SigmaPoly::constant(R, one));
        CHECK(k == 2);
    }
}

TEST_CASE("delta ring basics") {
    const auto D = d_du_f3();
    const auto u = u_of(D);
    const auto one = D->one, zero = D->zero;
    CHECK(D->center_degree == 3);
    // t³ is central when δ = d/du in characteristic 3.
    const auto t3 = DeltaPoly::monomial(D, one, 3);
    CHECK(is_right_invariant(t3));
    CHECK(t3 * DeltaPoly::constant(D, u) == DeltaPoly::constant(D, u) * t3);
    CHECK_FALSE(is_right_invariant(dp(D, {u, one})));
    // Right division by t leaves the constant term as remainder.
    auto [q, r] = right_divide(dp(D, {u, u, one}), DeltaPoly::t(D));
    CHECK(r == DeltaPoly::constant(D, u));
    CHECK(q * DeltaPoly::t(D) + r == dp(D, {u, u, one}));
    CHECK(gcrd_with_t(dp(D, {zero, one})) == DeltaPoly::t(D));

    const auto E = cu_du_f25();
    CHECK(E->center_degree == 5);
    const auto x = central_x(E);
    CHECK(x == dp(E, {E->zero, E->one, E->zero, E->zero, E->zero, E->one}));
    CHECK(is_right_invariant(x));
}

TEST_CASE("skew ring algebraic properties on random samples") {
    std::mt19937_64 rng(20240611);
    for (const auto& R : {ring_f4(), ring_f8(), ring_f9(), make_sigma_ring(f25(), 1), make_sigma_ring(f8(), 2)}) {
        for (int trial = 0; trial < 150; ++trial) {
            const auto f = random_sigma(R, static_cast<int>(rng() % 6), rng);
            const auto g = random_sigma(R, static_cast<int>(rng() % 5), rng);
            const auto h = random_sigma(R, static_cast<int>(rng() % 4), rng);
            REQUIRE((f * g) * h == f * (g * h));
            CHECK((f * g).degree() == f.degree() + g.degree());
            CHECK(f * (g + h) == f * g + f * h);
            auto [q, r] = right_divide(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
            const auto d = gcrd(f, g);
            CHECK(right_remainder(f, d).is_zero());
            CHECK(right_remainder(g, d).is_zero());
            const auto l = lclm(f, g);
            CHECK(right_remainder(l, f).is_zero());
            CHECK(right_remainder(l, g).is_zero());
            CHECK(l.degree() + d.degree() == f.degree() + g.degree());
        }
    }
    for (const auto& D : {d_du_f3(), cu_du_f25()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = random_delta(D, static_cast<int>(rng() % 4), rng);
            const auto g = random_delta(D, static_cast<int>(rng() % 3), rng);
            const auto h = random_delta(D, static_cast<int>(rng() % 3), rng);
            REQUIRE((f * g) * h == f * (g * h));
            CHECK((f * g).degree() == f.degree() + g.degree());
            auto [q, r] = right_divide(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }
}
