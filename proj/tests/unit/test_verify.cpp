#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "orenorm/cli.hpp"
#include "orenorm/parse.hpp"
#include "orenorm/verify.hpp"
#include "orenorm/verify_detail.hpp"

using namespace fx;

TEST_CASE("central polynomial literals") {
    const auto F4 = f4();
    const auto x = Poly<GfElem>::variable(F4->one());
    const auto one = Poly<GfElem>::constant(F4->one());
    CHECK(parse_central_poly(F4, "x^2+x+1") == x * x + x + one);
    CHECK(parse_central_poly(F4, "g*x") == g(F4) * x);
    CHECK(parse_central_poly(F4, "(x+1)^2") == x * x + one);
    CHECK_THROWS_AS(parse_central_poly(F4, "x/x"), Error);
    CHECK_THROWS_AS(parse_central_poly(F4, "t"), Error);
}

TEST_CASE("quintic example: displayed matrix agrees, closed form does not") {
    using namespace orenorm::verify_detail;
    const auto ex = quintic_ring();
    REQUIRE(ex.g_ok);
    const auto& R = ex.ring;
    for (const auto& a : quintic_values(R)) {
        const DeltaPoly f(R, {a, R->zero, R->zero, R->zero, R->one});
        CHECK(build_rho(f) == quintic_displayed_matrix(R, a));
        const auto terms = quintic_terms(R, a);
        CHECK(terms.matrix_det == terms.actual);
        CHECK(terms.rederived == terms.actual);
        // The published expression has the opposite sign on every δ-dependent term.
        CHECK(terms.stated != terms.actual);
    }
    // δ ≡ 0 would make both forms agree: a constant a has δ(a) = 0.
    const auto c = RationalFunction::constant(R->zero.ff(), R->zero.ff()->base->generator());
    const auto terms = quintic_terms(R, c);
    CHECK(terms.stated == terms.actual);
}

TEST_CASE("criteria with reduced trials") {
    VerifyOptions opt;
    opt.seed = 3;
    opt.trials = 10;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 9}) {
        const auto c = run_criterion(n, opt);
        INFO(format_check(c));
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(run_criterion(10, opt), Error);
    CHECK_THROWS_AS(run_suite("nope", opt), Error);
}

TEST_CASE("golden suite") {
    const auto rep = run_suite("golden", {});
    CHECK(rep.checks.size() >= 80);
    for (const auto& c : rep.checks) {
        INFO(format_check(c));
        CHECK(c.pass);
    }
}

TEST_CASE("format_check") {
    CheckResult c{"criterion 1", "term formula", true, "ok", 0.5, 5};
    CHECK(format_check(c) == "PASS criterion 1 (term formula): ok [0.50 s]");
    CHECK(format_check(c, false) == "PASS criterion 1 (term formula): ok");
}

TEST_CASE("cli exit codes") {
    auto run = [](std::vector<const char*> args, std::string* text = nullptr) {
        args.insert(args.begin(), "orenorm");
        std::ostringstream out, err;
        const int rc = run_cli(static_cast<int>(args.size()), args.data(), out, err);
        if (text) *text = out.str() + err.str();
        return rc;
    };
    std::string text;
    CHECK(run({"norm", "--p", "2", "--tower", "g^2+g+1", "--poly", "t+g"}, &text) == 0);
    CHECK(text == "x + 1\n");
    CHECK(run({"irreducible", "--case", "delta", "--p", "3", "--poly", "t^2+u"}) == 2);
    CHECK(run({"norm", "--p", "2", "--tower", "g^2+g+1", "--poly", "t+"}, &text) == 1);
    CHECK(text.find("ParseError") != std::string::npos);
    CHECK(run({"frobnicate"}) == 1);
    CHECK(run({"norm", "--case", "sigma", "--p", "2", "--poly", "t"}, &text) == 1);
    CHECK(text.find("InvalidRing") != std::string::npos);
    CHECK(run({"factor", "--case", "delta", "--p", "3", "--poly", "t^2+u"}, &text) == 1);
    CHECK(text.find("InfiniteConstantField") != std::string::npos);
}
