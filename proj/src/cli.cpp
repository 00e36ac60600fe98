#include "orenorm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "orenorm/central.hpp"
#include "orenorm/cyclic_algebra.hpp"
#include "orenorm/factor.hpp"
#include "orenorm/norm.hpp"
#include "orenorm/oracle.hpp"
#include "orenorm/parse.hpp"
#include "orenorm/verify.hpp"

namespace orenorm {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

struct Options {
    std::string ring_file;
    std::string kind = "sigma";
    std::uint64_t p = 2;
    std::string tower;
    std::uint64_t sigma_power = 1;
    std::string delta = "du";
    std::string u;
    std::uint64_t n = 3, d = 2, a = 1;
    std::string poly;
    std::string ordering;
    bool all_orderings = false;
    bool use_oracle = false;
    bool show_rho = false;
    std::uint64_t budget = 1000000;
    std::uint64_t seed = 7;
    int trials = 0;
    std::string suite = "all";
    std::string oracle_task;
    bool as_json = false;
    bool timing = false;
};

struct Ring {
    SigmaRing sigma;
    DeltaRing delta;
    AlgebraPtr alg;
    AlgebraRing algebra;
};

/// Fills options that were not given on the command line from a --ring JSON file.
void apply_ring_file(Options& o, const CLI::App& sub) {
    if (o.ring_file.empty()) return;
    std::ifstream in(o.ring_file);
    require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open ring file " + o.ring_file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("ring file: ") + e.what());
    }
    auto unset = [&](const char* flag) { return sub.count(flag) == 0; };
    auto num = [&](const char* key) -> std::uint64_t {
        const auto& v = j.at(key);
        return v.is_string() ? std::stoull(v.get<std::string>()) : v.get<std::uint64_t>();
    };
    auto str = [&](const char* key) {
        const auto& v = j.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    try {
        if (j.contains("case") && unset("--case")) o.kind = j.at("case").get<std::string>();
        if (j.contains("p") && unset("--p")) o.p = num("p");
        if (j.contains("q") && unset("--p")) o.p = num("q");
        if (j.contains("tower") && unset("--tower")) o.tower = str("tower");
        if (j.contains("sigma_power") && unset("--sigma-power")) o.sigma_power = num("sigma_power");
        if (j.contains("delta") && unset("--delta")) o.delta = str("delta");
        if (j.contains("u") && unset("--u")) o.u = str("u");
        if (j.contains("n") && unset("--n")) o.n = num("n");
        if (j.contains("d") && unset("--d")) o.d = num("d");
        if (j.contains("a") && unset("--a")) o.a = num("a");
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("ring file: ") + e.what());
    }
}

Ring resolve(const Options& o) {
    Ring r;
    if (o.kind == "sigma") {
        const auto field = parse_tower(o.p, o.tower);
        const GfElem u = o.u.empty() ? field->one() : parse_field_element(field, o.u);
        r.sigma = make_sigma_ring(field, o.sigma_power, u);
    } else if (o.kind == "delta") {
        const auto ff = make_function_field(parse_tower(o.p, o.tower));
        r.delta = make_delta_ring(parse_derivation(ff, o.delta));
    } else if (o.kind == "csa") {
        CyclicAlgebraSpec spec{o.p, o.n, o.d, o.a, 1};
        if (!o.u.empty()) {
            try {
                spec.u = std::stoull(o.u);
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "--u must be an integer for the csa case");
            }
        }
        r.alg = CyclicAlgebra::make(spec);
        r.algebra = make_algebra_ring(r.alg);
    } else {
        fail(ErrorKind::InvalidArgument, "--case must be sigma, delta or csa, got '" + o.kind + "'");
    }
    return r;
}

template <class K>
json matrix_json(const Matrix<Poly<K>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(format_poly(e, "x"));
        rows.push_back(jr);
    }
    return rows;
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
    if (o.as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

void require_poly(const Options& o) {
    require(!o.poly.empty(), ErrorKind::InvalidArgument, "--poly is required");
}

// ---- norm / mclm / bound ----

template <class K>
int norm_generic(const SkewPolynomial<K>& f, const Options& o, std::ostream& out) {
    const auto rho = build_rho(f);
    const auto N = reduced_norm(f);
    json j{{"f", to_string(f)}, {"norm", to_string(N)}, {"x", N.x_def}};
    std::string text;
    if (o.show_rho) {
        j["rho"] = matrix_json(rho);
        text += format_matrix(rho);
    }
    text += to_string(N) + "\n";
    emit(out, o, j, text);
    return kOk;
}

int cmd_norm(const Options& o, std::ostream& out) {
    require_poly(o);
    const auto r = resolve(o);
    if (r.sigma) return norm_generic(parse_sigma_poly(r.sigma, o.poly), o, out);
    if (r.delta) return norm_generic(parse_delta_poly(r.delta, o.poly), o, out);
    const auto f = parse_algebra_poly(r.algebra, o.poly);
    const auto N = algebra_norm(f);
    json j{{"f", to_string(f)}, {"norm", to_string(N)}, {"x", N.x_def}};
    std::string text;
    if (o.show_rho) {
        const auto m = omega_rho(f);
        j["omega_rho"] = matrix_json(m);
        text += format_matrix(m);
    }
    text += to_string(N) + "\n";
    emit(out, o, j, text);
    return kOk;
}

template <class K>
int mclm_generic(const SkewPolynomial<K>& f, const Options& o, std::ostream& out, bool as_bound) {
    const auto h = as_bound ? bound(f) : mclm(f);
    const auto crit = criterion_degree_check(f);
    json j{{"f", to_string(f)},
           {as_bound ? "bound" : "mclm", to_string(h)},
           {"degree", h.degree()},
           {"m", f.degree()},
           {"criterion_applies", crit.applies},
           {"sufficient_condition", crit.sufficient_condition}};
    emit(out, o, j, to_string(h) + "\n");
    return kOk;
}

int cmd_mclm(const Options& o, std::ostream& out, bool as_bound) {
    require_poly(o);
    const auto r = resolve(o);
    if (r.sigma) return mclm_generic(parse_sigma_poly(r.sigma, o.poly), o, out, as_bound);
    if (r.delta) return mclm_generic(parse_delta_poly(r.delta, o.poly), o, out, as_bound);
    fail(ErrorKind::InvalidArgument, "mclm and bound take --case sigma or delta");
}

// ---- irreducible ----

template <class K>
int report_verdict(const SkewPolynomial<K>& f, const IrreducibilityReport<K>& rep, const Options& o,
                   std::ostream& out) {
    json j{{"f", to_string(f)}, {"verdict", verdict_name(rep.verdict)}, {"route", route_name(rep.route)}};
    std::string text = verdict_name(rep.verdict);
    if (rep.route != Route::None) text += " (" + route_name(rep.route) + ")";
    text += "\n";
    if (rep.norm) {
        j["norm"] = to_string(*rep.norm);
        text += "N(f) = " + to_string(*rep.norm) + "\n";
    }
    if (rep.h) {
        j["mclm"] = to_string(*rep.h);
        text += "mclm(f) = " + to_string(*rep.h) + " (degree " + std::to_string(rep.deg_h) + ", m = " +
                std::to_string(rep.m) + ")\n";
    }
    if (!rep.note.empty()) {
        j["note"] = rep.note;
        text += "note: " + rep.note + "\n";
    }
    emit(out, o, j, text);
    return rep.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

int cmd_irreducible(const Options& o, std::ostream& out) {
    require_poly(o);
    const auto r = resolve(o);
    if (r.sigma) {
        const auto f = parse_sigma_poly(r.sigma, o.poly);
        IrreducibilityOptions<GfElem> opt;
        opt.seed = o.seed;
        if (o.use_oracle) {
            const OracleBudget budget{o.budget, 60.0};
            opt.oracle = [budget](const SigmaPoly& g) { return brute_irreducible(g, budget); };
        }
        return report_verdict(f, is_irreducible(f, opt), o, out);
    }
    if (r.delta) {
        require(!o.use_oracle, ErrorKind::InvalidArgument, "the oracle needs a finite coefficient field");
        const auto f = parse_delta_poly(r.delta, o.poly);
        IrreducibilityOptions<RationalFunction> opt;
        opt.seed = o.seed;
        return report_verdict(f, is_irreducible(f, opt), o, out);
    }
    fail(ErrorKind::InvalidArgument, "irreducible takes --case sigma or delta");
}

// ---- factor ----

json factorization_json(const Factorization<GfElem>& fac) {
    json fs = json::array();
    for (const auto& g : fac.factors) fs.push_back(to_string(g));
    json j{{"unit", to_string(fac.unit)}, {"factors", fs}, {"text", to_string(fac)}};
    if (!fac.central.empty()) {
        json cs = json::array();
        for (const auto& h : fac.central) cs.push_back(to_string(h));
        j["central"] = cs;
    }
    return j;
}

/// "1,0" (indices into the canonical central factor list) or "[x+2, x+1]".
std::vector<std::size_t> parse_ordering(const std::string& text, const SigmaPoly& f, std::uint64_t seed) {
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']') s += ch;
    std::vector<std::string> items;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
    std::vector<std::size_t> out;
    const bool numeric = std::all_of(items.begin(), items.end(), [](const std::string& it) {
        const auto b = it.find_first_not_of(' ');
        return b != std::string::npos && std::all_of(it.begin() + b, it.begin() + it.find_last_not_of(' ') + 1,
                                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    });
    if (numeric) {
        for (const auto& it : items) out.push_back(std::stoull(it));
        return out;
    }
    const auto& ring = f.ring();
    const auto canon = expand_factors(factor_central(ring, reduced_norm(f).poly, seed));
    std::vector<bool> used(canon.size(), false);
    for (const auto& it : items) {
        const auto h = parse_central_poly(ring->zero.field(), it).monic();
        std::size_t k = 0;
        while (k < canon.size() && (used[k] || canon[k].poly != h)) ++k;
        require(k < canon.size(), ErrorKind::InvalidArgument,
                "'" + it + "' is not an unused irreducible factor of N(f)");
        used[k] = true;
        out.push_back(k);
    }
    return out;
}

int cmd_factor(const Options& o, std::ostream& out) {
    require_poly(o);
    const auto r = resolve(o);
    if (r.delta) {
        // Raises InfiniteConstantField: F = F_q(u^p) admits no factoring here.
        factor_central(r.delta, reduced_norm(parse_delta_poly(r.delta, o.poly)).poly, o.seed);
    }
    require(static_cast<bool>(r.sigma), ErrorKind::InvalidArgument, "factor takes --case sigma");
    const auto f = parse_sigma_poly(r.sigma, o.poly);
    json j{{"f", to_string(f)}};
    std::string text;
    if (o.use_oracle) {
        const auto all = brute_factorizations(f, OracleBudget{o.budget, 60.0});
        json list = json::array();
        text += std::to_string(all.size()) + " factorizations (oracle)\n";
        for (const auto& fac : all) {
            list.push_back(factorization_json(fac));
            text += to_string(fac) + "\n";
        }
        j["count"] = all.size();
        j["factorizations"] = list;
        emit(out, o, j, text);
        return kOk;
    }
    const auto N = reduced_norm(f);
    j["norm"] = to_string(N);
    text += "N(f) = " + to_string(N) + "\n";
    if (o.all_orderings) {
        const auto set = all_factorizations(f, o.seed, o.budget);
        json cs = json::array();
        std::string ctext;
        for (const auto& h : set.central_factors) {
            cs.push_back(to_string(h));
            ctext += (ctext.empty() ? "" : ", ") + to_string(h);
        }
        j["central_factors"] = cs;
        j["repeated_central_factors"] = set.repeated_central_factors;
        text += "central factors: " + ctext + "\n";
        if (set.repeated_central_factors) text += "note: repeated central factors; one extraction shown\n";
        json list = json::array();
        text += std::to_string(set.list.size()) + " factorizations\n";
        for (const auto& fac : set.list) {
            list.push_back(factorization_json(fac));
            text += to_string(fac) + "\n";
        }
        j["count"] = set.list.size();
        j["factorizations"] = list;
        emit(out, o, j, text);
        return kOk;
    }
    std::vector<std::size_t> ordering;
    if (!o.ordering.empty()) ordering = parse_ordering(o.ordering, f, o.seed);
    const auto fac = rough_factorize(f, ordering, o.seed, o.budget);
    j["factorization"] = factorization_json(fac);
    text += to_string(fac) + "\n";
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        if (i < fac.central.size()) text += "  " + to_string(fac.factors[i]) + " -> " + to_string(fac.central[i]) + "\n";
    emit(out, o, j, text);
    return kOk;
}

// ---- oracle ----

int cmd_oracle(const Options& o, std::ostream& out) {
    require_poly(o);
    const auto r = resolve(o);
    require(static_cast<bool>(r.sigma), ErrorKind::InvalidArgument, "the oracle takes --case sigma");
    const auto f = parse_sigma_poly(r.sigma, o.poly);
    const OracleBudget budget{o.budget, 60.0};
    if (o.oracle_task == "irreducible") {
        const bool irr = brute_irreducible(f, budget);
        emit(out, o, json{{"f", to_string(f)}, {"irreducible", irr}}, irr ? "irreducible\n" : "reducible\n");
        return kOk;
    }
    const auto all = brute_factorizations(f, budget);
    json list = json::array();
    std::string text = std::to_string(all.size()) + " factorizations\n";
    for (const auto& fac : all) {
        list.push_back(factorization_json(fac));
        text += to_string(fac) + "\n";
    }
    emit(out, o, json{{"f", to_string(f)}, {"count", all.size()}, {"factorizations", list}}, text);
    return kOk;
}

// ---- csa-verify ----

int cmd_csa_verify(const Options& o, std::ostream& out) {
    require_poly(o);
    require(o.kind == "csa", ErrorKind::InvalidArgument, "csa-verify takes --case csa");
    const auto r = resolve(o);
    const auto f = parse_algebra_poly(r.algebra, o.poly);
    const auto N = algebra_norm(f);
    json j{{"algebra", r.alg->describe()}, {"f", to_string(f)}, {"norm", to_string(N)}};
    std::string text = r.alg->describe() + "\nN(f) = " + to_string(N) + "\n";
    bool all_ok = true;
    auto line = [&](const std::string& key, bool ok, const std::string& what) {
        j["checks"][key] = ok;
        all_ok = all_ok && ok;
        text += std::string(ok ? "PASS " : "FAIL ") + what + "\n";
    };
    bool unit_lead = true;
    try {
        inverse(f.lead());
    } catch (const Error&) {
        unit_lead = false;
    }
    if (unit_lead) {
        const auto deg = verify_degree_dm(f);
        line("degree", deg.pass(), "deg N = dm: " + std::to_string(deg.actual) + " vs " + std::to_string(deg.expected));
        const auto div = verify_divides(f);
        line("divides", div.ok, "f right-divides N(f)");
    } else {
        text += "skip degree and divisibility checks: leading coefficient is a zero divisor\n";
    }
    const bool in_E = std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const auto& c) { return c.in_E(); });
    if (in_E) {
        const auto rep = verify_E_coefficient_formula(f);
        line("constant_term", rep.constant_ok, "constant term " + to_string(rep.constant_actual) + " = N_{E/F}(a_0)");
        line("leading_term", rep.stated_ok,
             "leading term " + to_string(rep.leading_actual) + " = (-1)^{dr(n-1)} N_{E/F}(a_m) N_{E/C}(u)^r");
        j["leading_full_form_ok"] = rep.full_ok;
    }
    const auto sub = field_coefficient_reducibility(f);
    if (sub.coefficients_in_C) {
        line("dth_power", sub.dth_power_ok, "N(f) is the d-th power of the field-subring norm " + format_poly(sub.subring_norm, "x"));
        j["reducible"] = sub.reducible;
        j["predicted_min_factors"] = sub.predicted_min_factors;
        if (sub.reducible)
            text += "reducible: at least " + std::to_string(sub.predicted_min_factors) + " irreducible factors\n";
    }
    j["pass"] = all_ok;
    emit(out, o, j, text);
    return all_ok ? kOk : kError;
}

// ---- verify ----

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.trials = o.trials;
    const auto rep = run_suite(o.suite, vo);
    std::size_t passed = 0;
    json checks = json::array();
    std::string text;
    for (const auto& c : rep.checks) {
        passed += c.pass ? 1 : 0;
        json jc{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
        if (o.timing) jc["seconds"] = c.seconds;
        checks.push_back(jc);
        text += format_check(c, o.timing) + "\n";
    }
    text += std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks passed (suite " + o.suite +
            ", seed " + std::to_string(o.seed) + ")\n";
    emit(out, o,
         json{{"suite", o.suite}, {"seed", o.seed}, {"passed", passed}, {"total", rep.checks.size()}, {"checks", checks}},
         text);
    return rep.pass() ? kOk : kError;
}

void add_ring_flags(CLI::App* sub, Options& o) {
    sub->add_option("--ring", o.ring_file, "JSON ring configuration; flags override its fields");
    sub->add_option("--case", o.kind, "sigma, delta or csa");
    sub->add_option("--p,--q", o.p, "characteristic (csa: q)");
    sub->add_option("--tower", o.tower, "moduli separated by ';', e.g. \"g^2+g+1\"");
    sub->add_option("--sigma-power", o.sigma_power, "sigma = Frobenius^j");
    sub->add_option("--delta", o.delta, "derivation: du, d/du or r(u)*du");
    sub->add_option("--u", o.u, "central unit in x = u^-1 t^n (sigma: field literal, csa: integer)");
    sub->add_option("--n", o.n, "csa: [C:F]");
    sub->add_option("--d", o.d, "csa: [E:C]");
    sub->add_option("--a", o.a, "csa: z^d = a");
    sub->add_option("--poly", o.poly, "skew polynomial literal in t");
    sub->add_option("--seed", o.seed, "random seed (default: ORENORM_SEED or 7)");
    sub->add_flag("--json", o.as_json, "machine-readable output");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* s = std::getenv("ORENORM_SEED")) {
        try {
            o.seed = std::stoull(s);
        } catch (const std::exception&) {
            err << "error: ORENORM_SEED is not an integer\n";
            return kError;
        }
    }
    CLI::App app{"Reduced norms, bounds and factorizations in skew polynomial rings", "orenorm"};
    app.require_subcommand(1);

    auto* norm = app.add_subcommand("norm", "reduced norm N(f)");
    add_ring_flags(norm, o);
    norm->add_flag("--show-rho", o.show_rho, "print the representation matrix first");

    auto* mclm_cmd = app.add_subcommand("mclm", "minimal central left multiple");
    add_ring_flags(mclm_cmd, o);
    auto* bound_cmd = app.add_subcommand("bound", "bound f* (normalized monic)");
    add_ring_flags(bound_cmd, o);

    auto* irr = app.add_subcommand("irreducible", "norm-based irreducibility test");
    add_ring_flags(irr, o);
    irr->add_flag("--oracle", o.use_oracle, "fall back to brute force when inconclusive");
    irr->add_option("--budget", o.budget, "oracle candidate limit");

    auto* fac = app.add_subcommand("factor", "rough factorization");
    add_ring_flags(fac, o);
    fac->add_option("--ordering", o.ordering, "indices or central factors, e.g. \"1,0\" or \"[x+2, x+1]\"");
    fac->add_flag("--all-orderings", o.all_orderings, "one factorization per ordering");
    fac->add_flag("--oracle", o.use_oracle, "enumerate all factorizations by brute force");
    fac->add_option("--budget", o.budget, "search budget");

    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    add_ring_flags(orc, o);
    orc->add_option("task", o.oracle_task, "factor or irreducible")->required()->check(CLI::IsMember({"factor", "irreducible"}));
    orc->add_option("--budget", o.budget, "candidate limit per degree");

    auto* csa = app.add_subcommand("csa-verify", "cyclic-algebra norm checks for one polynomial");
    add_ring_flags(csa, o);

    auto* ver = app.add_subcommand("verify", "run an acceptance suite");
    ver->add_option("--suite", o.suite, "sigma-terms, sigma-factor, delta-identities, csa, oracle-agreement, golden, all");
    ver->add_option("--trials", o.trials, "samples per check (0: defaults)");
    ver->add_option("--seed", o.seed, "random seed (default: ORENORM_SEED or 7)");
    ver->add_flag("--json", o.as_json, "machine-readable output");
    ver->add_flag("--timing", o.timing, "include timings (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    try {
        for (auto* sub : app.get_subcommands()) apply_ring_file(o, *sub);
        if (norm->parsed()) return cmd_norm(o, out);
        if (mclm_cmd->parsed()) return cmd_mclm(o, out, false);
        if (bound_cmd->parsed()) return cmd_mclm(o, out, true);
        if (irr->parsed()) return cmd_irreducible(o, out);
        if (fac->parsed()) return cmd_factor(o, out);
        if (orc->parsed()) return cmd_oracle(o, out);
        if (csa->parsed()) return cmd_csa_verify(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace orenorm
