#pragma once

// Literal grammar shared by the CLI and config files:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ['^' ['-'] integer | '^' '(' ['-'] integer ')']
//   primary := integer | name | '(' expr ')'
// Names resolve to tower generators, u, t, x or z depending on what is being parsed.
// Products are evaluated left to right in the target ring, so "g*t" and "t*g" differ
// in a skew ring exactly as the commutation rule says.

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orenorm/cyclic_algebra.hpp"
#include "orenorm/errors.hpp"
#include "orenorm/function_field.hpp"
#include "orenorm/galois_field.hpp"
#include "orenorm/rings.hpp"

namespace orenorm {

template <class T>
struct ExprContext {
    std::function<T(std::int64_t)> number;
    std::function<std::optional<T>(const std::string&)> symbol;
    std::function<T(const T&, const T&)> divide;
    /// Integer powers; negative exponents may be rejected by the callee.
    std::function<T(const T&, std::int64_t)> power;
};

namespace detail {

struct Token {
    enum Kind { Number, Name, Op, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s);

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& msg);

template <class T>
class ExprParser {
   public:
    ExprParser(const std::string& text, const ExprContext<T>& ctx) : text_(text), toks_(tokenize(text)), ctx_(ctx) {}

    T run() {
        T v = expr();
        if (peek().kind != Token::End) parse_fail(text_, peek().pos, "unexpected '" + peek().text + "'");
        return v;
    }

   private:
    const std::string& text_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    const ExprContext<T>& ctx_;

    const Token& peek() const { return toks_[i_]; }
    bool accept(const char* op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++i_;
            return true;
        }
        return false;
    }

    T expr() {
        bool negate = false;
        if (accept("-"))
            negate = true;
        else
            accept("+");
        T acc = term();
        if (negate) acc = ctx_.number(0) - acc;
        for (;;) {
            if (accept("+"))
                acc = acc + term();
            else if (accept("-"))
                acc = acc - term();
            else
                return acc;
        }
    }

    T term() {
        T acc = factor();
        for (;;) {
            if (accept("*")) {
                acc = acc * factor();
            } else if (peek().kind == Token::Op && peek().text == "/") {
                const std::size_t pos = peek().pos;
                ++i_;
                const T rhs = factor();
                try {
                    acc = ctx_.divide(acc, rhs);
                } catch (const Error& e) {
                    parse_fail(text_, pos, e.what());
                }
            } else {
                return acc;
            }
        }
    }

    std::int64_t exponent() {
        const bool paren = accept("(");
        const bool neg = accept("-");
        if (peek().kind != Token::Number) parse_fail(text_, peek().pos, "expected an integer exponent");
        std::int64_t e = std::stoll(peek().text);
        ++i_;
        if (paren && !accept(")")) parse_fail(text_, peek().pos, "expected ')'");
        return neg ? -e : e;
    }

    T factor() {
        T base = primary();
        if (peek().kind == Token::Op && peek().text == "^") {
            const std::size_t pos = peek().pos;
            ++i_;
            const std::int64_t e = exponent();
            try {
                base = ctx_.power(base, e);
            } catch (const Error& err) {
                parse_fail(text_, pos, err.what());
            }
        }
        return base;
    }

    T primary() {
        const Token tok = peek();
        switch (tok.kind) {
            case Token::Number: {
                ++i_;
                std::int64_t v = 0;
                try {
                    v = std::stoll(tok.text);
                } catch (const std::exception&) {
                    parse_fail(text_, tok.pos, "integer out of range");
                }
                return ctx_.number(v);
            }
            case Token::Name: {
                ++i_;
                auto v = ctx_.symbol(tok.text);
                if (!v) parse_fail(text_, tok.pos, "unknown name '" + tok.text + "'");
                return *v;
            }
            case Token::Op:
                if (tok.text == "(") {
                    ++i_;
                    T v = expr();
                    if (!accept(")")) parse_fail(text_, peek().pos, "expected ')'");
                    return v;
                }
                parse_fail(text_, tok.pos, "unexpected '" + tok.text + "'");
            case Token::End:
                break;
        }
        parse_fail(text_, tok.pos, "unexpected end of input");
    }
};

/// x^e by squaring; negative e through `inv`.
template <class T>
T int_power(const T& x, std::int64_t e, const T& one, const std::function<T(const T&)>& inv) {
    T base = x;
    if (e < 0) {
        require(static_cast<bool>(inv), ErrorKind::ParseError, "negative exponent not allowed here");
        base = inv(x);
        e = -e;
    }
    T acc = one;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

}  // namespace detail

template <class T>
T parse_expression(const std::string& text, const ExprContext<T>& ctx) {
    return detail::ExprParser<T>(text, ctx).run();
}

/// Builds F_p, or a tower from moduli separated by ';', each a monic polynomial in a new
/// generator name with coefficients in the previous levels, e.g. "g^2+g+1" or "a^2+a+1; b^3+a".
FieldPtr parse_tower(std::uint64_t p, const std::string& tower);

GfElem parse_field_element(const FieldPtr& field, const std::string& text);
RationalFunction parse_rational(const FunctionFieldPtr& ff, const std::string& text);
/// "du", "d/du" or "<r(u)>*du", meaning δ = r(u)·d/du.
Derivation parse_derivation(const FunctionFieldPtr& ff, const std::string& text);

/// Polynomials in x with coefficients named by the tower's generators, e.g. "x^2+g*x+1".
Poly<GfElem> parse_central_poly(const FieldPtr& field, const std::string& text);

SigmaPoly parse_sigma_poly(const SigmaRing& ring, const std::string& text);
DeltaPoly parse_delta_poly(const DeltaRing& ring, const std::string& text);
/// Names: the generators of E's tower (C's generator, then E's), z and t.
AlgebraPoly parse_algebra_poly(const AlgebraRing& ring, const std::string& text);

}  // namespace orenorm
