#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace orenorm;
using namespace fx;

namespace {

RationalFunction poly_rf(const FunctionFieldPtr& ff, std::vector<std::int64_t> c) {
    Poly<GfElem> p(ff->base->zero());
    for (std::size_t i = 0; i < c.size(); ++i) p.set(i, ff->base->from_int(c[i]));
    return RationalFunction::from_poly(ff, p);
}

}  // namespace

TEST_CASE("rational function arithmetic examples") {
    const auto ff = make_function_field(f3());
    const auto u = RationalFunction::variable(ff);
    CHECK(u + u == poly_rf(ff, {0, 2}));
    CHECK(to_string(u.inv()) == "1/u");
    const auto up1 = poly_rf(ff, {1, 1});
    CHECK((u / up1) * up1 == u);
    CHECK_THROWS_WITH_AS(zero_of(u).inv(), doctest::Contains("DivisionByZero"), Error);
    // Normal form: monic denominator, reduced.
    const auto r = RationalFunction(ff, poly_rf(ff, {0, 2}).num(), poly_rf(ff, {0, 2, 2}).num());
    CHECK(r.den() == poly_rf(ff, {1, 1}).num());
    CHECK(r.num() == poly_rf(ff, {1}).num());
}

TEST_CASE("derivation examples") {
    const auto ff = make_function_field(f3());
    const auto u = RationalFunction::variable(ff);
    const auto d = Derivation::make(one_of(u));
    CHECK(d.apply(u * u) == poly_rf(ff, {0, 2}));
    CHECK(is_zero(d.apply(u.pow(3))));

    const auto ff25 = make_function_field(f25());
    const auto v = RationalFunction::variable(ff25);
    const auto c = RationalFunction::constant(ff25, g(f25()));
    const auto d25 = Derivation::make(c * v);
    CHECK(d25.apply(v) == c * v);
}

TEST_CASE("minimum polynomial checks") {
    const auto ff = make_function_field(f3());
    const auto u = RationalFunction::variable(ff);
    const auto zero = zero_of(u), one = one_of(u);
    const auto d = Derivation::make(one);
    CHECK(check_min_poly(d, {zero, one}));  // g = t^3
    CHECK_FALSE(check_min_poly(d, {one}));  // g = t
    CHECK(d.min_poly_linearized() == std::vector<RationalFunction>{zero, one});
    CHECK(d.min_poly_degree() == 3);

    const auto ff25 = make_function_field(f25());
    const auto v = RationalFunction::variable(ff25);
    const auto c = RationalFunction::constant(ff25, g(f25()));
    REQUIRE(c.pow(4) == -one_of(v));
    const auto d25 = Derivation::make(c * v);
    CHECK(check_min_poly(d25, {one_of(v), one_of(v)}));  // g = t^5 + t
    CHECK(d25.min_poly_linearized() == std::vector<RationalFunction>{one_of(v), one_of(v)});
    CHECK_THROWS_WITH_AS(Derivation::make(c * v, std::vector<RationalFunction>{zero_of(v), one_of(v)}),
                         doctest::Contains("InvalidDerivation"), Error);
    CHECK_THROWS_AS(Derivation::make(zero_of(v)), Error);
}

TEST_CASE("constants of d/du") {
    const auto ff = make_function_field(f3());
    const auto u = RationalFunction::variable(ff);
    const auto d = Derivation::make(one_of(u));
    CHECK(d.is_constant(u.pow(3)));
    CHECK_FALSE(d.is_constant(u));
    CHECK(d.is_constant(poly_rf(ff, {1, 0, 0, 1}) / poly_rf(ff, {2, 0, 0, 1})));
}

TEST_CASE("Leibniz rule and constant field structure") {
    std::mt19937_64 rng(3);
    for (const auto& base : {f3(), f25()}) {
        const auto ff = make_function_field(base);
        const auto u = RationalFunction::variable(ff);
        const auto d = base == f3() ? Derivation::make(one_of(u))
                                    : Derivation::make(RationalFunction::constant(ff, g(base)) * u);
        const std::uint64_t p = base->characteristic();
        for (int i = 0; i < 1000; ++i) {
            const auto f = random_rf(ff, rng, 3), h = random_rf(ff, rng, 3);
            CHECK(d.apply(f * h) == d.apply(f) * h + f * d.apply(h));
        }
        for (int i = 0; i < 50; ++i) {
            const auto f = random_rf(ff, rng, 4);
            const auto coords = d.flatten(f);
            REQUIRE(coords.size() == p);
            RationalFunction back = zero_of(u);
            for (std::size_t j = 0; j < p; ++j) {
                CHECK(d.is_constant(coords[j]));
                back += coords[j] * u.pow(j);
            }
            CHECK(back == f);
            // Constants are closed under the field operations.
            const auto a = coords[0], b = coords[1];
            CHECK(d.is_constant(a * b + a));
            if (!is_zero(b)) CHECK(d.is_constant(a / b));
        }
        // 1, u, …, u^{p-1} are independent over the constants: their coordinates are unit vectors.
        for (std::uint64_t j = 0; j < p; ++j) {
            const auto coords = d.flatten(u.pow(j));
            for (std::uint64_t k = 0; k < p; ++k) CHECK(coords[k] == (j == k ? one_of(u) : zero_of(u)));
        }
    }
}
