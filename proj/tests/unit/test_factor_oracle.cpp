#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orenorm/factor.hpp"
#include "orenorm/oracle.hpp"

using namespace fx;

namespace {

Poly<GfElem> xp(const FieldPtr& F, std::vector<GfElem> c) { return Poly<GfElem>(F->zero(), std::move(c)); }

std::vector<std::string> keys(const std::vector<Factorization<GfElem>>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(factorization_key(f));
    return out;
}

// Linear polynomials t + a whose norms have pairwise distinct roots.
std::vector<SigmaPoly> distinct_norm_linears(const SigmaRing& R, std::size_t count, std::mt19937_64& rng) {
    const FieldPtr& K = R->zero.field();
    std::vector<SigmaPoly> out;
    std::set<std::uint64_t> seen;
    while (out.size() < count) {
        const auto a = random_elem(K, rng, true);
        const auto lin = sp(R, {a, R->one});
        const auto key = reduced_norm(lin).poly.monic()[0].index();
        if (seen.insert(key).second) out.push_back(lin);
    }
    return out;
}

// Rabin's test over F with |F| = Q: x^{Q^d} = x mod h and gcd(x^{Q^{d/r}} - x, h) = 1 for primes r | d.
bool rabin_irreducible(const Poly<GfElem>& h, std::uint64_t Q) {
    const int d = h.degree();
    const auto x = Poly<GfElem>::variable(h.lead());
    auto frob = [&](int times) {
        Poly<GfElem> acc = x;
        for (int i = 0; i < times; ++i) acc = pow_mod(acc, Q, h);
        return acc;
    };
    if (!((frob(d) - x) % h).is_zero()) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(d)))
        if (gcd(frob(d / static_cast<int>(r)) - x, h).degree() != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("central factorization over the fixed field") {
    const auto F4 = f4();
    const auto one = F4->one(), zero = F4->zero();
    auto fs = factor_central(ring_f4(), xp(F4, {one, one, one}), 1);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 1);
    fs = factor_central(ring_f4(), xp(F4, {one, zero, one}), 1);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor.poly == xp(F4, {one, one}));
    CHECK(fs[0].multiplicity == 2);

    const auto F9 = f9();
    const auto two = F9->from_int(2), o9 = F9->one(), z9 = F9->zero();
    // 2x² + 1 = 2(x+1)(x+2)
    fs = factor_central(ring_f9(), xp(F9, {o9, z9, two}), 5);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor.poly == xp(F9, {o9, o9}));
    CHECK(fs[1].factor.poly == xp(F9, {two, o9}));

    CHECK_THROWS_AS(factor_central(d_du_f3(), Poly<RationalFunction>(d_du_f3()->zero, {d_du_f3()->one, d_du_f3()->one}), 1),
                    Error);
}

TEST_CASE("central factorization agrees with multiplication on random inputs") {
    std::mt19937_64 rng(8);
    // F_16 with σ of order 2 has F = F_4; F_27 with σ = Frob has F = F_3; F_64 with σ = Frob^3 gives F = F_8.
    const auto F16 = GaloisField::make(2, {{1, 1, 0, 0, 1}});
    const auto F27 = GaloisField::make(3, {{1, 2, 0, 1}});
    const auto F64 = GaloisField::make(2, {{1, 1, 0, 0, 0, 0, 1}});
    for (const auto& R : {make_sigma_ring(F16, 2), make_sigma_ring(F27, 1), make_sigma_ring(F64, 3), ring_f9()}) {
        const auto& K = R->zero.field();
        for (int trial = 0; trial < 40; ++trial) {
            Poly<GfElem> h = Poly<GfElem>::constant(R->one);
            const int parts = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < parts; ++i) {
                Poly<GfElem> piece = Poly<GfElem>::monomial(R->one, 1 + rng() % 3);
                for (int j = 0; j < piece.degree(); ++j) {
                    GfElem c = K->zero();
                    for (const auto& b : R->scalar_basis) c += K->from_int(static_cast<std::int64_t>(rng() % K->characteristic())) * b;
                    piece.set(j, c);
                }
                h = h * piece;
            }
            const auto fs = factor_central(R, h, rng());
            Poly<GfElem> prod = Poly<GfElem>::constant(R->one);
            for (const auto& f : fs) {
                CHECK(rabin_irreducible(f.factor.poly, R->center_field_order));
                prod = prod * orenorm::pow(f.factor.poly, static_cast<std::uint64_t>(f.multiplicity));
            }
            CHECK(prod == h);
        }
    }
}

TEST_CASE("irreducibility verdicts") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F);
    auto rep = is_irreducible(sp(R, {gg, zero, one}));
    CHECK(rep.verdict == Verdict::Irreducible);
    CHECK(rep.route == Route::NormIrreducible);
    CHECK(rep.norm->poly == xp(F, {one, one, one}));

    rep = is_irreducible(sp(R, {one, zero, one}));
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.deg_h == 1);
    IrreducibilityOptions<GfElem> opt;
    opt.oracle = [](const SigmaPoly& f) { return brute_irreducible(f); };
    rep = is_irreducible(sp(R, {one, zero, one}), opt);
    CHECK(rep.verdict == Verdict::Reducible);
    CHECK(rep.route == Route::Oracle);

    rep = is_irreducible(sp(R, {gg, one}));
    CHECK(rep.verdict == Verdict::Irreducible);
    CHECK(rep.route == Route::Degree1);

    try {
        (void)is_irreducible(sp(R, {zero, one, one}));
        FAIL("expected GcrdWithTNotOne");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GcrdWithTNotOne);
    }
}

TEST_CASE("delta case irreducibility needs a supplied factorization or tester") {
    const auto D = d_du_f3();
    const auto u = RationalFunction::variable(D->zero.ff());
    const auto f = DeltaPoly(D, {u, D->zero, D->one});  // t² + u
    auto rep = is_irreducible(f);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.norm->degree() == 2);

    IrreducibilityOptions<RationalFunction> opt;
    opt.tester = [](const Poly<RationalFunction>&) -> std::optional<bool> { return true; };
    rep = is_irreducible(f, opt);
    CHECK(rep.verdict == Verdict::Irreducible);
    CHECK(rep.route == Route::NormIrreducible);

    // A wrong factorization is rejected.
    IrreducibilityOptions<RationalFunction> bad;
    bad.norm_factorization = std::vector<CentralFactor<RationalFunction>>{
        {make_central(D, Poly<RationalFunction>(D->zero, {D->one, D->one})), 2}};
    CHECK_THROWS_AS(is_irreducible(f, bad), Error);

    // Supplying N(f) itself as irreducible certifies f.
    IrreducibilityOptions<RationalFunction> self;
    self.norm_factorization = std::vector<CentralFactor<RationalFunction>>{{make_central(D, reduced_norm(f).poly.monic()), 1}};
    CHECK(is_irreducible(f, self).verdict == Verdict::Irreducible);

    const auto x = central_x(D);
    CHECK(check_claimed_factorization(DeltaPoly::t(D) * DeltaPoly(D, {u, D->one}), D->one,
                                      {DeltaPoly::t(D), DeltaPoly(D, {u, D->one})}));
    CHECK_FALSE(check_claimed_factorization(x, D->one, {DeltaPoly::t(D), DeltaPoly(D, {u, D->one})}));
}

TEST_CASE("rough factorization over F_9") {
    const auto R = ring_f9();
    const auto F = f9();
    const auto one = F->one(), gg = g(F), two = F->from_int(2);
    const auto f = sp(R, {one, one}) * sp(R, {gg, one});
    CHECK(f == sp(R, {gg, two * gg + two, one}));

    const auto fac = rough_factorize(f, {1, 0}, 3);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == sp(R, {one, one}));
    CHECK(fac.factors[1] == sp(R, {gg, one}));
    CHECK(reduced_norm(sp(R, {gg, one})).poly.monic() == xp(F, {one, one}));
    CHECK(reduced_norm(sp(R, {one, one})).poly.monic() == xp(F, {two, one}));
    CHECK(fac.info[0].certified_irreducible);

    const auto other = rough_factorize(f, {0, 1}, 3);
    CHECK(other.factors[0] != fac.factors[0]);
    CHECK(other.product(R) == f);
    CHECK(mclm(other.factors[1]).poly == xp(F, {two, one}));

    const auto all = all_factorizations(f, 3);
    CHECK_FALSE(all.repeated_central_factors);
    CHECK(all.list.size() == 2);
    const auto brute = brute_factorizations(f);
    CHECK(keys(brute) == keys(all.list));

    const auto irr = sp(ring_f4(), {g(f4()), f4()->zero(), f4()->one()});
    const auto single = all_factorizations(irr, 1);
    REQUIRE(single.list.size() == 1);
    CHECK(single.list[0].factors[0] == irr);

    try {
        (void)rough_factorize(sp(ring_f4(), {f4()->one(), f4()->zero(), f4()->one()}), {}, 1);
        FAIL("expected CriterionNotSatisfied");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CriterionNotSatisfied);
    }
    CHECK_THROWS_AS(rough_factorize(f, {0, 0}, 1), Error);
}

TEST_CASE("all orderings of three distinct central factors") {
    std::mt19937_64 rng(2025);
    for (const auto& R : {make_sigma_ring(f25(), 1), make_sigma_ring(GaloisField::make(2, {{1, 1, 0, 0, 1}}), 2)}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto lin = distinct_norm_linears(R, 3, rng);
            const auto f = lin[0] * lin[1] * lin[2];
            const auto all = all_factorizations(f, rng());
            CHECK(all.list.size() == 6);
            for (const auto& fac : all.list) CHECK(fac.product(R) == f);
            CHECK(keys(brute_factorizations(f)) == keys(all.list));
        }
    }
}

TEST_CASE("repeated central factors fall back to a single extraction") {
    std::mt19937_64 rng(12);
    const auto R = ring_f9();
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 5; ++trial) {
        const auto a = sp(R, {random_elem(f9(), rng, true), R->one});
        const auto b = sp(R, {random_elem(f9(), rng, true), R->one});
        if (reduced_norm(a).poly != reduced_norm(b).poly) continue;
        const auto f = a * b;
        if (mclm(f).degree() != 2) continue;
        ++seen;
        const auto all = all_factorizations(f, 1);
        CHECK(all.repeated_central_factors);
        REQUIRE(all.list.size() == 1);
        CHECK(all.list[0].product(R) == f);
    }
    CHECK(seen > 0);
}

TEST_CASE("oracle examples") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = g(F), g2 = gg * gg;
    CHECK(brute_irreducible(sp(R, {gg, zero, one})));
    CHECK_FALSE(brute_irreducible(sp(R, {one, zero, one})));
    CHECK(brute_irreducible(sp(R, {gg, one})));

    const auto fs = brute_factorizations(sp(R, {one, zero, one}));
    REQUIRE(fs.size() == 3);
    std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const auto& fac : fs) {
        REQUIRE(fac.factors.size() == 2);
        pairs.insert({fac.factors[0][0].index(), fac.factors[1][0].index()});
    }
    const std::set<std::pair<std::uint64_t, std::uint64_t>> expected{
        {one.index(), one.index()}, {g2.index(), gg.index()}, {gg.index(), g2.index()}};
    CHECK(pairs == expected);
    CHECK(brute_factorizations(sp(R, {gg, zero, one})).size() == 1);

    OracleBudget tiny;
    tiny.max_candidates = 5;
    CHECK_THROWS_AS(brute_irreducible(random_sigma(ring_f9(), 4, *std::make_unique<std::mt19937_64>(1), true), tiny),
                    Error);
}

TEST_CASE("norm verdicts agree with the oracle") {
    // every monic quadratic with nonzero constant over F_4
    const auto R = ring_f4();
    const auto F = f4();
    int conclusive = 0;
    for (std::uint64_t a0 = 1; a0 < 4; ++a0)
        for (std::uint64_t a1 = 0; a1 < 4; ++a1) {
            const auto f = sp(R, {F->element(a0), F->element(a1), F->one()});
            const bool truth = brute_irreducible(f);
            const auto rep = is_irreducible(f);
            if (rep.verdict != Verdict::Inconclusive) {
                ++conclusive;
                CHECK((rep.verdict == Verdict::Irreducible) == truth);
            }
            if (truth) CHECK(factor_central(R, mclm(f).poly, 1).size() == 1);
        }
    CHECK(conclusive > 0);
    std::mt19937_64 rng(5);
    const auto R9 = ring_f9();
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_sigma(R9, 3, rng, true, true);
        const bool truth = brute_irreducible(f);
        const auto rep = is_irreducible(f);
        if (rep.verdict != Verdict::Inconclusive) CHECK((rep.verdict == Verdict::Irreducible) == truth);
        if (truth) {
            const auto fs = factor_central(R9, mclm(f).poly, 1);
            CHECK((fs.size() == 1 && fs[0].multiplicity == 1));
        }
    }
}

TEST_CASE("oracle arithmetic matches the ring implementation") {
    std::mt19937_64 rng(64);
    for (const auto& R : {ring_f4(), ring_f8(), make_sigma_ring(f8(), 2)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_sigma(R, static_cast<int>(rng() % 6), rng);
            const auto g = random_sigma(R, static_cast<int>(rng() % 4), rng);
            CHECK(oracle::multiply(f.coeffs(), g.coeffs(), R->sigma_power) == (f * g).coeffs());
            CHECK(oracle::right_remainder(f.coeffs(), g.coeffs(), R->sigma_power) == right_remainder(f, g).coeffs());
        }
    }
}
