#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orenorm/errors.hpp"

namespace orenorm {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// An element of a finite field, stored as its index: the little-endian base-p digits
/// of the index are the F_p-coordinates in the tower's monomial basis. Elements of a
/// lower tower level keep the same index when viewed in a higher level.
class GfElem {
   public:
    GfElem() = default;
    GfElem(FieldPtr field, std::uint64_t index);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t index() const noexcept { return v_; }

    GfElem operator-() const;
    GfElem& operator+=(const GfElem& o);
    GfElem& operator-=(const GfElem& o);
    GfElem& operator*=(const GfElem& o);
    GfElem& operator/=(const GfElem& o);
    friend GfElem operator+(GfElem a, const GfElem& b) { return a += b; }
    friend GfElem operator-(GfElem a, const GfElem& b) { return a -= b; }
    friend GfElem operator*(GfElem a, const GfElem& b) { return a *= b; }
    friend GfElem operator/(GfElem a, const GfElem& b) { return a /= b; }
    friend bool operator==(const GfElem& a, const GfElem& b) noexcept;
    friend bool operator!=(const GfElem& a, const GfElem& b) noexcept { return !(a == b); }

    GfElem pow(std::uint64_t e) const;
    GfElem inv() const;

   private:
    FieldPtr field_;
    std::uint64_t v_ = 0;

    const GaloisField& checked_field() const;
    void check_same(const GfElem& o) const;
};

bool is_zero(const GfElem& a) noexcept;
GfElem zero_of(const GfElem& a);
GfElem one_of(const GfElem& a);
GfElem inverse(const GfElem& a);
std::string to_string(const GfElem& a);

/// F_p or an extension step on top of another GaloisField. Immutable once built.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
   public:
    static constexpr std::uint64_t kTableLimit = 1u << 16;

    static FieldPtr prime(std::uint64_t p);
    /// Adjoins a root of `modulus` (monic, coefficients in `base`, degree >= 2).
    static FieldPtr extend(const FieldPtr& base, const std::vector<GfElem>& modulus, std::string name);
    /// Builds a tower from moduli given as coefficient indices over the previous level.
    static FieldPtr make(std::uint64_t p, const std::vector<std::vector<std::uint64_t>>& tower,
                         std::vector<std::string> names = {});

    static FieldPtr from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    std::uint64_t characteristic() const noexcept { return p_; }
    /// Degree over F_p.
    unsigned degree() const noexcept { return degree_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Number of extension steps above F_p.
    unsigned depth() const noexcept { return depth_; }
    unsigned step_degree() const noexcept { return step_degree_; }
    const FieldPtr& base() const noexcept { return base_; }
    const std::string& name() const noexcept { return name_; }
    /// Tower level k (0 = F_p, depth() = this field).
    FieldPtr level(unsigned k) const;
    /// Degree over F_p of tower level k.
    unsigned level_degree(unsigned k) const;
    /// Monic modulus of the top step over base(), as base elements.
    std::vector<GfElem> modulus() const;

    GfElem zero() const;
    GfElem one() const;
    GfElem from_int(std::int64_t c) const;
    GfElem element(std::uint64_t index) const;
    /// The adjoined root of level k's modulus, viewed in this field (k >= 1).
    GfElem generator(unsigned level) const;
    GfElem generator() const { return generator(depth_); }

    /// F_p coordinates (length degree()).
    std::vector<std::uint64_t> coords(const GfElem& a) const;
    GfElem from_coords(const std::vector<std::uint64_t>& c) const;
    /// Coefficients over base() (length step_degree()).
    std::vector<GfElem> base_coeffs(const GfElem& a) const;
    GfElem from_base_coeffs(const std::vector<GfElem>& c) const;

    /// Views an element of one of this field's tower levels in this field.
    GfElem lift(const GfElem& a) const;
    bool in_level(const GfElem& a, unsigned k) const;
    /// Views a (level-k resident) element of this field in level k.
    GfElem project(const GfElem& a, unsigned k) const;

    bool has_tables() const noexcept { return !exp_.empty(); }
    std::string format(std::uint64_t v) const;

    // Raw index arithmetic; inputs are assumed in range.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    /// a^(p^j)
    std::uint64_t frobenius(std::uint64_t a, std::uint64_t j) const;

   private:
    GaloisField() = default;

    std::uint64_t p_ = 0;
    unsigned degree_ = 1;
    unsigned depth_ = 0;
    unsigned step_degree_ = 1;
    std::uint64_t order_ = 0;
    std::uint64_t base_order_ = 1;
    FieldPtr base_;
    std::vector<std::uint64_t> modulus_;  // base indices, monic, size step_degree_ + 1
    std::string name_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;

    std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e) const;
    void build_tables();
};

/// a^(p^j) in a's own field.
GfElem frobenius(const GfElem& a, std::uint64_t j);
/// Product of the conjugates a, σ(a), …, σ^{n-1}(a) with σ = Frobenius^sigma_power.
GfElem conjugate_product(const GfElem& a, std::uint64_t sigma_power, std::uint64_t n);
/// N_{K/F}(a) where F is tower level `level` of a's field K; the result lies in F.
GfElem relative_norm(const GfElem& a, unsigned level);

/// The i-th field element in index order, or nullopt past the field's order.
std::optional<GfElem> enumeration_point(const GfElem& proto, std::size_t i);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff the monic polynomial with the given coefficients (over `base`) is irreducible.
bool is_irreducible_over(const FieldPtr& base, const std::vector<GfElem>& monic);
/// First monic irreducible polynomial of the given degree over `base`, in index order.
std::vector<GfElem> find_irreducible(const FieldPtr& base, unsigned degree);

}  // namespace orenorm
