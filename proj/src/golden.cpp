// Worked examples from the module contracts, one check each.

#include <algorithm>
#include <chrono>
#include <functional>

#include "orenorm/central.hpp"
#include "orenorm/cyclic_algebra.hpp"
#include "orenorm/factor.hpp"
#include "orenorm/norm.hpp"
#include "orenorm/oracle.hpp"
#include "orenorm/parse.hpp"
#include "orenorm/verify_detail.hpp"

namespace orenorm::verify_detail {

namespace {

class Golden {
   public:
    void add(const std::string& module, const std::string& example, const std::function<bool()>& fn) {
        CheckResult c;
        c.id = "golden";
        c.title = module;
        c.detail = example;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.pass = fn();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail += std::string(" (exception: ") + e.what() + ")";
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.checks.push_back(std::move(c));
    }
    void expect_error(const std::string& module, const std::string& example, ErrorKind kind,
                      const std::function<void()>& fn) {
        add(module, example, [&] {
            try {
                fn();
            } catch (const Error& e) {
                return e.kind() == kind;
            }
            return false;
        });
    }
    SuiteReport rep;
};

bool same_factors(const Factorization<GfElem>& fac, const std::vector<SigmaPoly>& expected) {
    return fac.factors == expected;
}

}  // namespace

SuiteReport run_golden_suite() {
    Golden G;
    G.rep.suite = "golden";

    const auto F4 = parse_tower(2, "g^2+g+1");
    const auto F9 = parse_tower(3, "g^2-g-1");
    const auto R4 = make_sigma_ring(F4, 1);
    const auto R9 = make_sigma_ring(F9, 1);
    auto S4 = [&](const std::string& s) { return parse_sigma_poly(R4, s); };
    auto S9 = [&](const std::string& s) { return parse_sigma_poly(R9, s); };
    auto X4 = [&](const std::string& s) { return parse_central_poly(F4, s); };
    auto X9 = [&](const std::string& s) { return parse_central_poly(F9, s); };
    const GfElem g4 = F4->generator();
    const GfElem g9 = F9->generator();

    // galois_fields
    G.add("galois_fields", "(2, [g^2+g+1]) gives F_4", [&] { return F4->order() == 4; });
    G.add("galois_fields", "(3, [g^2-g-1]) gives F_9", [&] { return F9->order() == 9; });
    G.expect_error("galois_fields", "(2, [g^2]) is rejected as ReducibleModulus", ErrorKind::ReducibleModulus,
                   [] { parse_tower(2, "g^2"); });
    G.add("galois_fields", "Frobenius of g in F_4 is g+1", [&] { return frobenius(g4, 1) == g4 + F4->one(); });
    G.add("galois_fields", "Frobenius^0 is the identity", [&] { return frobenius(g9, 0) == g9; });
    G.add("galois_fields", "Frobenius of g in F_9 is 2g+1",
          [&] { return frobenius(g9, 1) == F9->from_int(2) * g9 + F9->one(); });
    G.add("galois_fields", "g*g = g+1 in F_4", [&] { return g4 * g4 == g4 + F4->one(); });
    G.add("galois_fields", "inv(g) = g+1 in F_4", [&] { return g4.inv() == g4 + F4->one(); });
    G.add("galois_fields", "a + 0 = a", [&] { return g9 + F9->zero() == g9; });

    // function_field
    const auto ff3 = make_function_field(GaloisField::prime(3));
    const auto u3 = RationalFunction::variable(ff3);
    const auto one3 = one_of(u3);
    const auto two3 = one3 + one3;
    const auto D3 = Derivation::make(one3);
    const auto ff25 = make_function_field(parse_tower(5, "c^2+2"));
    const auto u25 = RationalFunction::variable(ff25);
    const auto c25 = RationalFunction::constant(ff25, ff25->base->generator());
    const auto D25 = Derivation::make(c25 * u25);
    G.add("function_field", "u + u = 2u over F_3(u)", [&] { return u3 + u3 == two3 * u3; });
    G.add("function_field", "inv(u) = 1/u", [&] { return u3.inv() * u3 == one3 && u3.inv().num().degree() == 0; });
    G.add("function_field", "(u/(u+1))*(u+1) = u", [&] { return u3 / (u3 + one3) * (u3 + one3) == u3; });
    G.add("function_field", "d/du(u^2) = 2u", [&] { return D3.apply(u3 * u3) == two3 * u3; });
    G.add("function_field", "d/du(u^3) = 0 over F_3", [&] { return is_zero(D3.apply(u3.pow(3))); });
    G.add("function_field", "c*u*d/du maps u to c*u", [&] { return D25.apply(u25) == c25 * u25; });
    G.add("function_field", "g = t^3 annihilates d/du over F_3", [&] { return check_min_poly(D3, {zero_of(u3), one3}); });
    G.add("function_field", "g = t^5 + t annihilates c*u*d/du over F_25", [&] {
        const auto one = one_of(u25);
        return check_min_poly(D25, {one, one});
    });
    G.add("function_field", "g = t is not the minimum polynomial of d/du", [&] { return !check_min_poly(D3, {one3}); });
    G.add("function_field", "u^3 is a constant of d/du", [&] { return D3.is_constant(u3.pow(3)); });
    G.add("function_field", "u is not a constant", [&] { return !D3.is_constant(u3); });
    G.add("function_field", "(u^3+1)/(u^3+2) is a constant",
          [&] { return D3.is_constant((u3.pow(3) + one3) / (u3.pow(3) + two3)); });

    // skew_ring
    const auto DR3 = make_delta_ring(D3);
    G.add("skew_ring", "t*g = (g+1)*t over F_4", [&] { return S4("t*g") == S4("(g+1)*t"); });
    G.add("skew_ring", "(t+1)(t+1) = t^2+1 over F_4", [&] { return S4("t+1") * S4("t+1") == S4("t^2+1"); });
    G.add("skew_ring", "t*u = u*t + 1 in F_3(u)[t; d/du]",
          [&] { return parse_delta_poly(DR3, "t*u") == parse_delta_poly(DR3, "u*t+1"); });
    G.add("skew_ring", "(t^2+1) / (t+1) = (t+1, 0)", [&] {
        const auto [q, r] = right_divide(S4("t^2+1"), S4("t+1"));
        return q == S4("t+1") && r.is_zero();
    });
    G.add("skew_ring", "(t^2+1) / (t+g) = (t+g+1, 0)", [&] {
        const auto [q, r] = right_divide(S4("t^2+1"), S4("t+g"));
        return q == S4("t+g+1") && r.is_zero();
    });
    G.add("skew_ring", "(t+1) / t^2 = (0, t+1)", [&] {
        const auto [q, r] = right_divide(S4("t+1"), S4("t^2"));
        return q.is_zero() && r == S4("t+1");
    });
    G.add("skew_ring", "gcrd(t^2+1, t+1) = t+1", [&] { return gcrd(S4("t^2+1"), S4("t+1")) == S4("t+1"); });
    G.add("skew_ring", "gcrd(f, f) = monic(f)", [&] { return gcrd(S4("g*t+1"), S4("g*t+1")) == S4("g*t+1").monic(); });
    G.add("skew_ring", "lclm(t+1, t+1) = t+1", [&] { return lclm(S4("t+1"), S4("t+1")) == S4("t+1"); });
    G.add("skew_ring", "gcrd_with_t(t^2+1) = 1", [&] { return gcrd_with_t(S4("t^2+1")) == S4("1"); });
    G.add("skew_ring", "gcrd_with_t(t^2+t) = t", [&] { return gcrd_with_t(S4("t^2+t")) == S4("t"); });
    G.add("skew_ring", "gcrd_with_t(t+g) = 1", [&] { return gcrd_with_t(S4("t+g")) == S4("1"); });
    G.add("skew_ring", "t^2+1 is right-invariant", [&] { return is_right_invariant(S4("t^2+1")); });
    G.add("skew_ring", "t+g is not right-invariant", [&] { return !is_right_invariant(S4("t+g")); });
    G.add("skew_ring", "t is right-invariant", [&] { return is_right_invariant(S4("t")); });
    G.add("skew_ring", "strip t from t^3+t gives (t^2+1, 1)", [&] {
        const auto [f, s] = strip_t_factor(S4("t^3+t"));
        return f == S4("t^2+1") && s == 1;
    });
    G.add("skew_ring", "strip t from t+g gives (t+g, 0)", [&] {
        const auto [f, s] = strip_t_factor(S4("t+g"));
        return f == S4("t+g") && s == 0;
    });
    G.add("skew_ring", "strip t from t^2 gives (1, 2)", [&] {
        const auto [f, s] = strip_t_factor(S4("t^2"));
        return f == S4("1") && s == 2;
    });

    // central_structure
    G.add("central_structure", "t^3+g*t^2+t+1 gives P_0 = g*x+1, P_1 = x+1", [&] {
        const auto rw = center_rewrite(S4("t^3+g*t^2+t+1"));
        return rw.parts[0] == X4("g*x+1") && rw.parts[1] == X4("x+1");
    });
    G.add("central_structure", "a constant a_0 gives P_0 = a_0", [&] {
        const auto rw = center_rewrite(S4("g"));
        return rw.parts[0] == X4("g") && rw.parts[1].is_zero();
    });
    G.add("central_structure", "t^5 over F_3(u)[t; d/du] gives P_2 = x", [&] {
        const auto rw = center_rewrite(parse_delta_poly(DR3, "t^5"));
        return rw.parts[0].is_zero() && rw.parts[1].is_zero() && rw.parts[2] == Poly<RationalFunction>::variable(one3);
    });
    G.add("central_structure", "mclm(t+g) = x+1", [&] { return mclm(S4("t+g")).poly == X4("x+1"); });
    G.add("central_structure", "mclm(t^2+1) = x+1", [&] { return mclm(S4("t^2+1")).poly == X4("x+1"); });
    G.add("central_structure", "mclm(t^2+g) = x^2+x+1", [&] { return mclm(S4("t^2+g")).poly == X4("x^2+x+1"); });
    G.add("central_structure", "criterion applies to t^2+g", [&] { return criterion_degree_check(S4("t^2+g")).applies; });
    G.add("central_structure", "criterion does not apply to t^2+1",
          [&] { return !criterion_degree_check(S4("t^2+1")).applies; });
    G.add("central_structure", "criterion applies to t+g", [&] { return criterion_degree_check(S4("t+g")).applies; });

    // norm_engine
    G.add("norm_engine", "rho(t+g) = [[g, 1], [x, g^2]]", [&] {
        const RegRepMatrix<GfElem> expect = {{X4("g"), X4("1")}, {X4("x"), X4("g^2")}};
        return build_rho(S4("t+g")) == expect;
    });
    G.add("norm_engine", "rho(g) = diag(g, g^2)", [&] {
        const RegRepMatrix<GfElem> expect = {{X4("g"), X4("0")}, {X4("0"), X4("g^2")}};
        return build_rho(S4("g")) == expect;
    });
    G.add("norm_engine", "rho(t^4 + u) over F_25(u) matches the displayed 5x5 matrix", [&] {
        const auto ex = quintic_ring();
        const auto a = quintic_values(ex.ring).front();
        return ex.g_ok && build_rho(DeltaPoly(ex.ring, {a, ex.ring->zero, ex.ring->zero, ex.ring->zero, ex.ring->one})) ==
                              quintic_displayed_matrix(ex.ring, a);
    });
    G.add("norm_engine", "N(t+g) = x+1", [&] { return reduced_norm(S4("t+g")).poly == X4("x+1"); });
    G.add("norm_engine", "N(t^2+g) = x^2+x+1", [&] { return reduced_norm(S4("t^2+g")).poly == X4("x^2+x+1"); });
    G.add("norm_engine", "N(t^3+u) = x^3+u^3 over F_3(u)[t; d/du]", [&] {
        const Poly<RationalFunction> expect(zero_of(u3), {u3.pow(3), zero_of(u3), zero_of(u3), one3});
        return reduced_norm(parse_delta_poly(DR3, "t^3+u")).poly == expect;
    });
    G.add("norm_engine", "cofactor(t+g) = t+g+1", [&] { return cofactor(S4("t+g")) == S4("t+g+1"); });
    G.add("norm_engine", "cofactor(t^2+1) = t^2+1 with N = (x+1)^2", [&] {
        return cofactor(S4("t^2+1")) == S4("t^2+1") && reduced_norm(S4("t^2+1")).poly == X4("(x+1)^2");
    });
    G.add("norm_engine", "N(1) = 1 and cofactor(1) = 1",
          [&] { return reduced_norm(S4("1")).poly == X4("1") && cofactor(S4("1")) == S4("1"); });
    G.add("norm_engine", "term formula holds for t+g (constant 1, leading 1)", [&] {
        const auto rep = verify_term_formula(S4("t+g"));
        return rep.pass() && rep.constant_actual == F4->one() && rep.leading_actual == F4->one();
    });
    G.add("norm_engine", "term formula holds for a constant", [&] {
        const auto rep = verify_term_formula(S4("g"));
        return rep.pass() && reduced_norm(S4("g")).poly == X4("1");
    });
    G.add("norm_engine", "N(t) = x", [&] { return verify_term_formula(S4("t")).pass() && reduced_norm(S4("t")).poly == X4("x"); });

    // factor_engine
    G.add("factor_engine", "x^2+x+1 is irreducible over F_2", [&] {
        const auto fs = factor_central(R4, X4("x^2+x+1"), 1);
        return fs.size() == 1 && fs[0].multiplicity == 1 && fs[0].factor.poly == X4("x^2+x+1");
    });
    G.add("factor_engine", "(x+1)^2 over F_2 gives [(x+1, 2)]", [&] {
        const auto fs = factor_central(R4, X4("(x+1)^2"), 1);
        return fs.size() == 1 && fs[0].multiplicity == 2 && fs[0].factor.poly == X4("x+1");
    });
    G.add("factor_engine", "2(x+1)(x+2) over F_3 is monicized into two linear factors", [&] {
        const auto fs = factor_central(R9, X9("2*(x+1)*(x+2)"), 1);
        return fs.size() == 2 && fs[0].factor.poly == X9("x+1") && fs[1].factor.poly == X9("x+2");
    });
    G.add("factor_engine", "t^2+g is irreducible via norm-irreducible", [&] {
        const auto rep = is_irreducible(S4("t^2+g"));
        return rep.verdict == Verdict::Irreducible && rep.route == Route::NormIrreducible;
    });
    G.add("factor_engine", "t^2+1 is inconclusive by norm alone and reducible with the oracle", [&] {
        IrreducibilityOptions<GfElem> opt;
        const bool inconclusive = is_irreducible(S4("t^2+1"), opt).verdict == Verdict::Inconclusive;
        opt.oracle = [](const SigmaPoly& f) { return brute_irreducible(f); };
        const auto rep = is_irreducible(S4("t^2+1"), opt);
        return inconclusive && rep.verdict == Verdict::Reducible && rep.route == Route::Oracle;
    });
    G.add("factor_engine", "t+g is irreducible via degree-1", [&] {
        const auto rep = is_irreducible(S4("t+g"));
        return rep.verdict == Verdict::Irreducible && rep.route == Route::Degree1;
    });
    const auto q9 = S9("t^2+(2*g+2)*t+g");
    G.add("factor_engine", "F_9 quadratic with ordering [x+2, x+1] gives (t+1)(t+g)", [&] {
        const auto fac = rough_factorize(q9, {1, 0}, 1);
        return q9 == S9("(t+1)*(t+g)") && same_factors(fac, {S9("t+1"), S9("t+g")}) &&
               reduced_norm(S9("t+g")).poly.monic() == X9("x+1") && reduced_norm(S9("t+1")).poly.monic() == X9("x+2");
    });
    G.add("factor_engine", "F_9 quadratic with ordering [x+1, x+2] gives the other decomposition", [&] {
        const auto fac = rough_factorize(q9, {0, 1}, 1);
        return fac.factors.size() == 2 && fac.factors[0].degree() == 1 && fac.factors[1].degree() == 1 &&
               fac.factors[0].is_monic() && fac.factors[1].is_monic() && fac.product(R9) == q9 &&
               !same_factors(fac, {S9("t+1"), S9("t+g")});
    });
    G.add("factor_engine", "t^2+g factors as itself", [&] {
        const auto fac = rough_factorize(S4("t^2+g"), {}, 1);
        return same_factors(fac, {S4("t^2+g")});
    });
    G.add("factor_engine", "(t+1)(t+g) over F_9 has exactly 2 factorizations",
          [&] { return all_factorizations(q9, 1).list.size() == 2; });
    G.add("factor_engine", "an irreducible f has 1 factorization",
          [&] { return all_factorizations(S4("t^2+g"), 1).list.size() == 1; });
    G.add("factor_engine", "three linear factors with distinct central factors give 6 (over F_25)", [&] {
        // N(t+a) ≐ x − N(a) takes only two values over F_9/F_3, so this runs over F_25/F_5.
        const auto F25 = parse_tower(5, "c^2+2");
        const auto R25 = make_sigma_ring(F25, 1);
        std::vector<GfElem> picks;
        std::vector<GfElem> norms;
        for (std::uint64_t i = 1; i < 25 && picks.size() < 3; ++i) {
            const GfElem a = F25->element(i);
            const GfElem n = a * frobenius(a, 1);
            if (std::find(norms.begin(), norms.end(), n) == norms.end()) {
                picks.push_back(a);
                norms.push_back(n);
            }
        }
        SigmaPoly f = SigmaPoly::constant(R25, F25->one());
        for (const auto& a : picks) f = f * SigmaPoly(R25, {a, F25->one()});
        return all_factorizations(f, 1).list.size() == 6 && brute_factorizations(f).size() == 6;
    });

    // cyclic_algebra
    const auto A = CyclicAlgebra::make({2, 3, 2, 1, 1});
    const auto AR = make_algebra_ring(A);
    const auto E = A->E();
    const GfElem cgen = E->generator(1);
    const GfElem egen = E->generator();
    auto apoly = [](const AlgebraRing& r, std::vector<AlgebraElement> c) { return AlgebraPoly(r, std::move(c)); };
    G.add("cyclic_algebra", "d = 2, f = t + c with c in C is flagged reducible", [&] {
        const auto rep = field_coefficient_reducibility(apoly(AR, {AlgebraElement::from_E(A, cgen), AR->one}));
        return rep.reducible && rep.predicted_min_factors == 2 && rep.dth_power_ok;
    });
    G.add("cyclic_algebra", "d = 1 degenerates to the field case with no claim", [&] {
        const auto A1 = CyclicAlgebra::make({2, 3, 1, 1, 1});
        const auto R1 = make_algebra_ring(A1);
        const auto rep = field_coefficient_reducibility(apoly(R1, {AlgebraElement::from_E(A1, A1->E()->generator(1)), R1->one}));
        return !rep.reducible && rep.predicted_min_factors == 0;
    });
    G.add("cyclic_algebra", "f = c constant in C: N = N_{E/F}(c), no factor claim", [&] {
        const auto rep = field_coefficient_reducibility(apoly(AR, {AlgebraElement::from_E(A, cgen)}));
        return !rep.reducible && rep.norm == Poly<GfElem>::constant(relative_norm(cgen, 0));
    });
    G.add("cyclic_algebra", "omega(e) = diag(e, gamma(e))", [&] {
        const Matrix<GfElem> expect = {{egen, E->zero()}, {E->zero(), A->gamma(egen)}};
        return omega(AlgebraElement::from_E(A, egen)) == expect;
    });
    G.add("cyclic_algebra", "omega(z) = [[0, 1], [a, 0]] and omega(z^2) = diag(a, a)", [&] {
        const auto z = AlgebraElement::z(A);
        const Matrix<GfElem> wz = {{E->zero(), E->one()}, {A->a(), E->zero()}};
        const Matrix<GfElem> wz2 = {{A->a(), E->zero()}, {E->zero(), A->a()}};
        return omega(z) == wz && omega(z * z) == wz2;
    });
    G.add("cyclic_algebra", "omega(1) = I", [&] {
        const Matrix<GfElem> id = {{E->one(), E->zero()}, {E->zero(), E->one()}};
        return omega(AR->one) == id;
    });
    G.add("cyclic_algebra", "constant a_0 in E has N = N_{E/F}(a_0)", [&] {
        return algebra_norm(apoly(AR, {AlgebraElement::from_E(A, egen)})).poly ==
               Poly<GfElem>::constant(relative_norm(egen, 0));
    });
    G.add("cyclic_algebra", "constant a_0 in C has N = N_{C/F}(a_0)^d", [&] {
        const GfElem nc = E->lift(relative_norm(E->project(cgen, 1), 0));
        return algebra_norm(apoly(AR, {AlgebraElement::from_E(A, cgen)})).poly == Poly<GfElem>::constant(nc.pow(2));
    });
    G.add("cyclic_algebra", "f = t with n = 2, d = 3, u = 1 has N = +-x^3", [&] {
        const auto A2 = CyclicAlgebra::make({3, 2, 3, 2, 1});
        const auto R2 = make_algebra_ring(A2);
        const auto N = algebra_norm(apoly(R2, {R2->zero, R2->one})).poly;
        bool mono = N.degree() == 3;
        for (int i = 0; mono && i < 3; ++i) mono = is_zero(N[i]);
        return mono;
    });
    G.add("cyclic_algebra", "monic linear f over E divides N(f) with cofactor degree dn - 1", [&] {
        const auto rep = verify_divides(apoly(AR, {AlgebraElement::from_E(A, egen), AR->one}));
        return rep.ok && rep.cofactor.degree() == 5;
    });
    G.add("cyclic_algebra", "f = 1 has cofactor 1", [&] {
        const auto rep = verify_divides(apoly(AR, {AR->one}));
        return rep.ok && rep.cofactor == apoly(AR, {AR->one});
    });

    // oracle
    G.add("oracle", "t^2+g over F_4 is irreducible", [&] { return brute_irreducible(S4("t^2+g")); });
    G.add("oracle", "t^2+1 over F_4 is reducible", [&] { return !brute_irreducible(S4("t^2+1")); });
    G.add("oracle", "degree-1 f is irreducible", [&] { return brute_irreducible(S4("g*t+1")); });
    G.add("oracle", "t^2+1 over F_4 has exactly 3 factorizations", [&] {
        const auto all = brute_factorizations(S4("t^2+1"));
        const std::vector<std::vector<SigmaPoly>> expect = {
            {S4("t+1"), S4("t+1")}, {S4("t+g^2"), S4("t+g")}, {S4("t+g"), S4("t+g^2")}};
        if (all.size() != 3) return false;
        for (const auto& e : expect)
            if (std::none_of(all.begin(), all.end(), [&](const auto& fac) { return same_factors(fac, e); })) return false;
        return true;
    });
    G.add("oracle", "(t+1)(t+g) over F_9 has exactly 2 factorizations", [&] { return brute_factorizations(q9).size() == 2; });
    G.add("oracle", "irreducible f has 1 factorization", [&] { return brute_factorizations(S4("t^2+g")).size() == 1; });

    // cli
    G.add("cli", "norm of t+g over F_4 prints \"x + 1\"", [&] { return to_string(reduced_norm(S4("t+g"))) == "x + 1"; });

    return G.rep;
}

}  // namespace orenorm::verify_detail
