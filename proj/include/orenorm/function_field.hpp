#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orenorm/galois_field.hpp"
#include "orenorm/poly.hpp"

namespace orenorm {

/// The rational function field F_q(u) over a GaloisField.
struct FunctionField {
    FieldPtr base;
    std::string var = "u";
};
using FunctionFieldPtr = std::shared_ptr<const FunctionField>;

FunctionFieldPtr make_function_field(FieldPtr base, std::string var = "u");

/// Reduced fraction num/den with den monic; zero is 0/1.
class RationalFunction {
   public:
    RationalFunction() = default;
    RationalFunction(FunctionFieldPtr ff, Poly<GfElem> num, Poly<GfElem> den);

    static RationalFunction from_poly(FunctionFieldPtr ff, Poly<GfElem> num);
    static RationalFunction constant(FunctionFieldPtr ff, const GfElem& c);
    static RationalFunction variable(FunctionFieldPtr ff);

    const FunctionFieldPtr& ff() const noexcept { return ff_; }
    const Poly<GfElem>& num() const noexcept { return num_; }
    const Poly<GfElem>& den() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction inv() const;
    RationalFunction pow(std::uint64_t e) const;
    /// Formal derivative d/du.
    RationalFunction d_du() const;
    GfElem eval(const GfElem& at) const;

   private:
    FunctionFieldPtr ff_;
    Poly<GfElem> num_;
    Poly<GfElem> den_;

    void check_same(const RationalFunction& o) const;
    void normalize();
};

bool is_zero(const RationalFunction& a) noexcept;
RationalFunction zero_of(const RationalFunction& a);
RationalFunction one_of(const RationalFunction& a);
RationalFunction inverse(const RationalFunction& a);
std::string to_string(const RationalFunction& a);
/// The polynomial in u whose base-q digits are i; distinct for distinct i.
std::optional<RationalFunction> enumeration_point(const RationalFunction& proto, std::size_t i);

/// A derivation δ = r(u)·d/du on F_q(u) together with its minimum polynomial, the
/// p-polynomial g(t) = Σ lin[i] t^{p^i} (lin.back() = 1) with g(δ) = 0.
class Derivation {
   public:
    /// Computes the minimum polynomial, or verifies a supplied one (InvalidDerivation).
    static Derivation make(const RationalFunction& image_u,
                           std::optional<std::vector<RationalFunction>> min_poly = std::nullopt);

    const FunctionFieldPtr& ff() const noexcept { return image_u_.ff(); }
    const RationalFunction& image_u() const noexcept { return image_u_; }
    const std::vector<RationalFunction>& min_poly_linearized() const noexcept { return lin_; }
    /// p^e
    std::uint64_t min_poly_degree() const;
    /// Dense coefficients of g(t) (length p^e + 1).
    std::vector<RationalFunction> min_poly_dense() const;

    RationalFunction apply(const RationalFunction& f, std::uint64_t times = 1) const;
    bool is_constant(const RationalFunction& f) const;
    /// Coordinates of f in the basis 1, u, …, u^{p-1} over Const(δ) = F_q(u^p).
    std::vector<RationalFunction> flatten(const RationalFunction& f) const;
    std::string describe() const;

   private:
    RationalFunction image_u_;
    std::vector<RationalFunction> lin_;
};

/// True iff g(δ) annihilates u, g has constant coefficients, and no p-polynomial of
/// lower p-degree annihilates u.
bool check_min_poly(const Derivation& d, const std::vector<RationalFunction>& lin);

}  // namespace orenorm
