#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace orenorm;
using namespace fx;

TEST_CASE("field_make accepts irreducible moduli and rejects bad input") {
    CHECK(f4()->order() == 4);
    CHECK(f9()->order() == 9);
    CHECK_THROWS_WITH_AS(GaloisField::make(2, {{0, 0, 1}}), doctest::Contains("ReducibleModulus"), Error);
    CHECK_THROWS_WITH_AS(GaloisField::make(4, {{1, 1, 1}}), doctest::Contains("NonPrimeCharacteristic"), Error);
    CHECK_THROWS_WITH_AS(GaloisField::make(2, {{1, 1}}), doctest::Contains("InvalidModulus"), Error);
    // g^4 + g + 1 over F_2 is irreducible; g^4 + g^2 + 1 = (g^2+g+1)^2 is not.
    CHECK(GaloisField::make(2, {{1, 1, 0, 0, 1}})->order() == 16);
    CHECK_THROWS_AS(GaloisField::make(2, {{1, 0, 1, 0, 1}}), Error);
    // Degree 4 without roots but reducible: (g^2+g+1)(g^2+g+1) already covered; (g^2+1)... over F_3:
    // x^4 + 1 = (x^2+x+2)(x^2+2x+2) over F_3 has no roots in F_3.
    CHECK_THROWS_AS(GaloisField::make(3, {{1, 0, 0, 0, 1}}), Error);
}

TEST_CASE("field arithmetic examples") {
    const auto F = f4();
    const auto gg = g(F);
    CHECK(gg * gg == gg + F->one());
    CHECK(gg.inv() == gg + F->one());
    CHECK(gg + F->zero() == gg);
    CHECK_THROWS_WITH_AS(F->zero().inv(), doctest::Contains("DivisionByZero"), Error);
    CHECK(to_string(gg + F->one()) == "g + 1");
}

TEST_CASE("frobenius examples") {
    const auto gg4 = g(f4());
    CHECK(frobenius(gg4, 1) == gg4 + f4()->one());
    CHECK(frobenius(gg4, 0) == gg4);
    const auto gg9 = g(f9());
    CHECK(frobenius(gg9, 1) == f9()->from_int(2) * gg9 + f9()->one());
}

TEST_CASE("relative norm examples") {
    CHECK(relative_norm(g(f4()), 0) == f4()->one());
    CHECK(relative_norm(f4()->zero(), 0) == f4()->zero());
    CHECK(relative_norm(f4()->one(), 0) == f4()->one());
    CHECK(relative_norm(g(f9()), 0) == f9()->from_int(2));
    CHECK_THROWS_WITH_AS(relative_norm(g(f9()), 2), doctest::Contains("NotASubfieldLevel"), Error);
}

TEST_CASE("frobenius is a field automorphism and norms are multiplicative") {
    std::mt19937_64 rng(11);
    for (const auto& F : {f4(), f8(), f9(), f25()}) {
        for (int i = 0; i < 10000; ++i) {
            const auto a = F->element(rng() % F->order());
            const auto b = F->element(rng() % F->order());
            CHECK_EQ(frobenius(a + b, 1), frobenius(a, 1) + frobenius(b, 1));
            CHECK_EQ(frobenius(a * b, 1), frobenius(a, 1) * frobenius(b, 1));
            CHECK_EQ(frobenius(a, F->degree()), a);
            if (i < 500) CHECK_EQ(relative_norm(a * b, 0), relative_norm(a, 0) * relative_norm(b, 0));
        }
    }
}

TEST_CASE("every nonzero element of F_4 has norm 1 to F_2") {
    for (std::uint64_t i = 1; i < 4; ++i) CHECK(relative_norm(f4()->element(i), 0) == f4()->one());
}

TEST_CASE("two-level towers and the table-free path agree") {
    const auto F3 = GaloisField::prime(3);
    const auto C = GaloisField::extend(F3, find_irreducible(F3, 3), "c");
    const auto E = GaloisField::extend(C, find_irreducible(C, 2), "e");
    CHECK(E->order() == 729);
    CHECK(E->has_tables());
    // F_{2^17} is above the table limit and uses tower multiplication.
    const auto F2 = GaloisField::prime(2);
    const auto big = GaloisField::extend(F2, find_irreducible(F2, 17), "g");
    CHECK_FALSE(big->has_tables());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto a = big->element(1 + rng() % (big->order() - 1));
        CHECK(a * a.inv() == big->one());
        CHECK(frobenius(a, 17) == a);
        const auto c = E->element(1 + rng() % 728);
        CHECK(c * c.inv() == E->one());
        CHECK(E->in_level(relative_norm(c, 1), 1));
        CHECK(E->in_level(relative_norm(c, 0), 0));
    }
}

TEST_CASE("field JSON round trip") {
    const auto F3 = GaloisField::prime(3);
    const auto C = GaloisField::extend(F3, find_irreducible(F3, 2), "g1");
    const auto E = GaloisField::extend(C, find_irreducible(C, 2), "g");
    const auto j = E->to_json();
    const auto back = GaloisField::from_json(j);
    CHECK(back->to_json() == j);
    CHECK(back->order() == 81);
    CHECK(GaloisField::from_json(f9()->to_json())->to_json() == f9()->to_json());
}

TEST_CASE("cross-field operations fail loudly") {
    CHECK_THROWS_WITH_AS(g(f4()) + g(f8()), doctest::Contains("FieldMismatch"), Error);
}
