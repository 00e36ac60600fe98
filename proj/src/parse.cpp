#include "orenorm/parse.hpp"

#include <regex>
#include <set>

namespace orenorm {

namespace detail {

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            const std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Number, s.substr(start, i - start), start});
        } else if (std::isalpha(c) || c == '_') {
            const std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Token::Name, s.substr(start, i - start), start});
        } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            parse_fail(s, i, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

void parse_fail(const std::string& text, std::size_t pos, const std::string& msg) {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
}

}  // namespace detail

namespace {

std::optional<GfElem> generator_named(const FieldPtr& field, const std::string& name) {
    for (unsigned k = 1; k <= field->depth(); ++k)
        if (field->level(k)->name() == name) return field->generator(k);
    return std::nullopt;
}

std::vector<std::string> names_in(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& tok : detail::tokenize(text))
        if (tok.kind == detail::Token::Name) out.push_back(tok.text);
    return out;
}

template <class K>
ExprContext<SkewPolynomial<K>> skew_context(const RingPtr<K>& ring,
                                            std::function<K(std::int64_t)> number,
                                            std::function<std::optional<K>(const std::string&)> scalar) {
    using SP = SkewPolynomial<K>;
    ExprContext<SP> ctx;
    ctx.number = [ring, number](std::int64_t v) { return SP::constant(ring, number(v)); };
    ctx.symbol = [ring, scalar](const std::string& name) -> std::optional<SP> {
        if (name == "t") return SP::t(ring);
        if (auto c = scalar(name)) return SP::constant(ring, *c);
        return std::nullopt;
    };
    ctx.divide = [ring](const SP& a, const SP& b) {
        require(b.degree() == 0, ErrorKind::ParseError, "only division by nonzero constants is allowed");
        return a * SP::constant(ring, inverse(b[0]));
    };
    ctx.power = [ring](const SP& a, std::int64_t e) {
        std::function<SP(const SP&)> inv;
        if (a.degree() == 0) inv = [ring](const SP& x) { return SP::constant(ring, inverse(x[0])); };
        return detail::int_power(a, e, SP::constant(ring, ring->one), inv);
    };
    return ctx;
}

}  // namespace

FieldPtr parse_tower(std::uint64_t p, const std::string& tower) {
    FieldPtr field = GaloisField::prime(p);
    std::size_t start = 0;
    while (start <= tower.size()) {
        std::size_t end = tower.find(';', start);
        if (end == std::string::npos) end = tower.size();
        const std::string level = tower.substr(start, end - start);
        start = end + 1;
        if (level.find_first_not_of(" \t") == std::string::npos) {
            if (end == tower.size()) break;
            detail::parse_fail(tower, end, "empty tower level");
        }
        std::set<std::string> fresh;
        for (const auto& name : names_in(level))
            if (!generator_named(field, name)) fresh.insert(name);
        if (fresh.size() != 1)
            fail(ErrorKind::ParseError, "tower level \"" + level + "\" must use exactly one new generator name");
        const std::string var = *fresh.begin();
        const FieldPtr base = field;
        using PG = Poly<GfElem>;
        ExprContext<PG> ctx;
        ctx.number = [base](std::int64_t v) { return PG::constant(base->from_int(v)); };
        ctx.symbol = [base, var](const std::string& name) -> std::optional<PG> {
            if (name == var) return PG::variable(base->one());
            if (auto g = generator_named(base, name)) return PG::constant(*g);
            return std::nullopt;
        };
        ctx.divide = [](const PG& a, const PG& b) {
            require(b.degree() == 0, ErrorKind::ParseError, "only division by nonzero constants is allowed");
            return a * inverse(b[0]);
        };
        ctx.power = [base](const PG& a, std::int64_t e) {
            return detail::int_power(a, e, PG::constant(base->one()), std::function<PG(const PG&)>());
        };
        const PG mod = parse_expression(level, ctx);
        require(mod.degree() >= 2 && mod.lead() == base->one(), ErrorKind::InvalidModulus,
                "tower modulus \"" + level + "\" must be monic of degree at least 2");
        field = GaloisField::extend(base, mod.coeffs(), var);
        if (end == tower.size()) break;
    }
    return field;
}

GfElem parse_field_element(const FieldPtr& field, const std::string& text) {
    ExprContext<GfElem> ctx;
    ctx.number = [field](std::int64_t v) { return field->from_int(v); };
    ctx.symbol = [field](const std::string& name) { return generator_named(field, name); };
    ctx.divide = [](const GfElem& a, const GfElem& b) { return a / b; };
    ctx.power = [field](const GfElem& a, std::int64_t e) {
        return detail::int_power(a, e, field->one(), std::function<GfElem(const GfElem&)>([](const GfElem& x) { return x.inv(); }));
    };
    return parse_expression(text, ctx);
}

RationalFunction parse_rational(const FunctionFieldPtr& ff, const std::string& text) {
    using RF = RationalFunction;
    ExprContext<RF> ctx;
    ctx.number = [ff](std::int64_t v) { return RF::constant(ff, ff->base->from_int(v)); };
    ctx.symbol = [ff](const std::string& name) -> std::optional<RF> {
        if (name == ff->var) return RF::variable(ff);
        if (auto g = generator_named(ff->base, name)) return RF::constant(ff, *g);
        return std::nullopt;
    };
    ctx.divide = [](const RF& a, const RF& b) { return a / b; };
    ctx.power = [ff](const RF& a, std::int64_t e) {
        return detail::int_power(a, e, RF::constant(ff, ff->base->one()), std::function<RF(const RF&)>([](const RF& x) { return x.inv(); }));
    };
    return parse_expression(text, ctx);
}

Derivation parse_derivation(const FunctionFieldPtr& ff, const std::string& text) {
    static const std::regex form(R"(^\s*(.*?)\s*\*?\s*(?:d\s*/\s*)?d([A-Za-z_]\w*)\s*$)");
    std::smatch m;
    require(std::regex_match(text, m, form), ErrorKind::ParseError,
            "derivation must look like \"du\" or \"<r(u)>*du\", got \"" + text + "\"");
    require(m[2].str() == ff->var, ErrorKind::ParseError, "derivation variable must be " + ff->var);
    std::string coeff = m[1].str();
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    const RationalFunction r =
        coeff.find_first_not_of(" \t") == std::string::npos ? one_of(RationalFunction::variable(ff)) : parse_rational(ff, coeff);
    return Derivation::make(r);
}

SigmaPoly parse_sigma_poly(const SigmaRing& ring, const std::string& text) {
    const FieldPtr field = ring->zero.field();
    auto ctx = skew_context<GfElem>(
        ring, [field](std::int64_t v) { return field->from_int(v); },
        [field](const std::string& name) { return generator_named(field, name); });
    return parse_expression(text, ctx);
}

DeltaPoly parse_delta_poly(const DeltaRing& ring, const std::string& text) {
    const auto ff = ring->zero.ff();
    auto ctx = skew_context<RationalFunction>(
        ring, [ff](std::int64_t v) { return RationalFunction::constant(ff, ff->base->from_int(v)); },
        [ff](const std::string& name) -> std::optional<RationalFunction> {
            if (name == ff->var) return RationalFunction::variable(ff);
            if (auto g = generator_named(ff->base, name)) return RationalFunction::constant(ff, *g);
            return std::nullopt;
        });
    return parse_expression(text, ctx);
}

AlgebraPoly parse_algebra_poly(const AlgebraRing& ring, const std::string& text) {
    const AlgebraPtr alg = ring->one.algebra();
    auto ctx = skew_context<AlgebraElement>(
        ring, [alg](std::int64_t v) { return AlgebraElement::from_E(alg, alg->E()->from_int(v)); },
        [alg](const std::string& name) -> std::optional<AlgebraElement> {
            if (name == "z") return AlgebraElement::z(alg);
            if (auto g = generator_named(alg->E(), name)) return AlgebraElement::from_E(alg, *g);
            return std::nullopt;
        });
    return parse_expression(text, ctx);
}

Poly<GfElem> parse_central_poly(const FieldPtr& field, const std::string& text) {
    using P = Poly<GfElem>;
    ExprContext<P> ctx;
    ctx.number = [&](std::int64_t v) { return P(field->zero(), {field->from_int(v)}); };
    ctx.symbol = [&](const std::string& name) -> std::optional<P> {
        if (name == "x") return P::variable(field->one());
        if (auto g = generator_named(field, name)) return P::constant(*g);
        return std::nullopt;
    };
    ctx.divide = [](const P& a, const P& b) {
        require(b.degree() == 0, ErrorKind::ParseError, "division by a non-constant");
        return inverse(b[0]) * a;
    };
    ctx.power = [&](const P& b, std::int64_t e) { return detail::int_power<P>(b, e, P::constant(field->one()), {}); };
    return parse_expression(text, ctx);
}

}  // namespace orenorm
