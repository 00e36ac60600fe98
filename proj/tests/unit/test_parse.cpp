#include <doctest.h>

#include "fixtures.hpp"
#include "orenorm/parse.hpp"

using namespace fx;

TEST_CASE("tower and field element literals") {
    const auto F4 = parse_tower(2, "g^2+g+1");
    CHECK(F4->order() == 4);
    const auto g = F4->generator();
    CHECK(parse_field_element(F4, "g+1") == g + F4->one());
    CHECK(parse_field_element(F4, "g^2") == g + F4->one());
    CHECK(parse_field_element(F4, "g^-1") == g.inv());
    CHECK(parse_field_element(F4, "(g+1)*g") == F4->one());
    CHECK(parse_field_element(F4, "-g + 3") == g + F4->one());

    const auto T = parse_tower(2, "a^2+a+1; b^3+a");
    CHECK(T->order() == 64);
    CHECK(T->depth() == 2);
    const auto b = T->generator(2), a = T->generator(1);
    CHECK(b * b * b == a);
    CHECK(parse_field_element(T, "b/a") == b / a);

    CHECK(parse_tower(5, "")->order() == 5);

    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of([] { parse_tower(2, "g^2+1"); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { parse_tower(4, "g^2+g+1"); }) == ErrorKind::NonPrimeCharacteristic);
    CHECK(kind_of([&] { parse_field_element(F4, "h+1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_field_element(F4, "g+"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_field_element(F4, "g $ 1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_field_element(F4, "1/0"); }) == ErrorKind::ParseError);
    try {
        parse_field_element(F4, "g + h");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("skew polynomial literals") {
    const auto R = ring_f4();
    const auto F = f4();
    const auto one = F->one(), zero = F->zero(), gg = fx::g(F);
    CHECK(parse_sigma_poly(R, "t+g") == sp(R, {gg, one}));
    CHECK(parse_sigma_poly(R, "(g+1)*t^2 + g*t + 1") == sp(R, {one, gg, gg + one}));
    CHECK(parse_sigma_poly(R, "t*g") == sp(R, {zero, gg + one}));
    CHECK(parse_sigma_poly(R, "t^3 + t") == sp(R, {zero, one, zero, one}));
    CHECK(parse_sigma_poly(R, "(t+1)*(t+g)/g") == (sp(R, {one, one}) * sp(R, {gg, one})).scaled(one) *
                                                        SigmaPoly::constant(R, gg.inv()));
    CHECK_THROWS_AS(parse_sigma_poly(R, "1/t"), Error);

    const auto D = d_du_f3();
    const auto u = RationalFunction::variable(D->zero.ff());
    CHECK(parse_delta_poly(D, "t*u") == DeltaPoly(D, {D->one, u}));
    CHECK(parse_delta_poly(D, "t^3 + 1/u") == DeltaPoly(D, {u.inv(), D->zero, D->zero, D->one}));
    const auto ff25 = make_function_field(parse_tower(5, "c^2+2"));
    const auto d = parse_derivation(ff25, "c*u*du");
    CHECK(d.min_poly_degree() == 5);
    CHECK(parse_rational(ff25, "(u^2+1)/u") == (RationalFunction::variable(ff25).pow(2) + one_of(RationalFunction::variable(ff25))) /
                                                  RationalFunction::variable(ff25));
    CHECK(parse_derivation(make_function_field(f3()), "du").min_poly_degree() == 3);
    CHECK(parse_derivation(make_function_field(f3()), "d/du").min_poly_degree() == 3);
    CHECK_THROWS_AS(parse_derivation(make_function_field(f3()), "dv"), Error);

    const auto A = CyclicAlgebra::make({3, 3, 2, 1, 2});
    const auto RA = make_algebra_ring(A);
    const auto f = parse_algebra_poly(RA, "t^2 + z*t + c*e");
    CHECK(f.degree() == 2);
    CHECK(f[1] == AlgebraElement::z(A));
    CHECK(f[0] == AlgebraElement::from_E(A, A->E()->generator(1) * A->E()->generator(2)));
}
