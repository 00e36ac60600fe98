#pragma once

// Dense univariate polynomials over a coefficient type T.
//
// T must provide value semantics, + - * and unary -, ==, and the free functions
// zero_of(t), one_of(t), is_zero(t). Division-based algorithms additionally need
// inverse(t) and a commutative T. Ring-only operations (add, mul, eval) keep operand
// order, so they are also valid over the noncommutative algebra elements used by the
// cyclic-algebra layer, where the indeterminate is central.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orenorm/errors.hpp"

namespace orenorm {

namespace detail {
// The member Poly::is_zero() hides the coefficient overload inside the class body.
template <class T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

template <class T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(T zero) : zero_(std::move(zero)) {}
    Poly(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const T& c) { return Poly(zero_of(c), {c}); }
    static Poly monomial(const T& c, std::size_t k) {
        Poly r(zero_of(c));
        if (detail::coeff_is_zero(c)) return r;
        r.c_.assign(k + 1, zero_of(c));
        r.c_[k] = c;
        return r;
    }
    /// The indeterminate itself, built from any element of the coefficient domain.
    static Poly variable(const T& proto) { return monomial(one_of(proto), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& zero_elem() const noexcept { return zero_; }

    const T& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const T& lead() const {
        require(!c_.empty(), ErrorKind::DivisionByZeroPolynomial, "leading coefficient of zero polynomial");
        return c_.back();
    }

    void set(std::size_t i, const T& value) {
        if (i >= c_.size()) {
            if (detail::coeff_is_zero(value)) return;
            c_.resize(i + 1, zero_);
        }
        c_[i] = value;
        trim();
    }

    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == one_of(zero_); }

    Poly operator-() const {
        Poly r(zero_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        adopt_zero(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        adopt_zero(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.c_.empty() ? b.zero_ : a.zero_);
        if (a.c_.empty() || b.c_.empty()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, r.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Left scalar multiple s·P.
    friend Poly operator*(const T& s, const Poly& p) {
        Poly r(p.zero_);
        r.c_.reserve(p.c_.size());
        for (const auto& a : p.c_) r.c_.push_back(s * a);
        r.trim();
        return r;
    }
    /// Right scalar multiple P·s.
    friend Poly operator*(const Poly& p, const T& s) {
        Poly r(p.zero_);
        r.c_.reserve(p.c_.size());
        for (const auto& a : p.c_) r.c_.push_back(a * s);
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// x^k · P
    Poly shifted(std::size_t k) const {
        if (c_.empty() || k == 0) return *this;
        Poly r(zero_);
        r.c_.assign(k, zero_);
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    T eval(const T& x) const {
        if (c_.empty()) return zero_of(x);
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        Poly r(zero_);
        if (c_.size() <= 1) return r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(scale_by_integer(c_[i], i));
        r.trim();
        return r;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        return inverse(c_.back()) * (*this);
    }

    template <class F>
    Poly map(F&& fn) const {
        Poly r(zero_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(fn(a));
        r.trim();
        return r;
    }

   private:
    T zero_{};
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    void adopt_zero(const Poly& o) {
        if (c_.empty() && !o.c_.empty()) zero_ = o.zero_;
    }
    static T scale_by_integer(const T& a, std::size_t k) {
        // k·a by doubling; characteristic-agnostic.
        T acc = zero_of(a);
        T base = a;
        while (k) {
            if (k & 1) acc = acc + base;
            base = base + base;
            k >>= 1;
        }
        return acc;
    }
};

/// Quotient and remainder with a = q·b + r, deg r < deg b. Commutative fields only.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    require(!b.is_zero(), ErrorKind::DivisionByZeroPolynomial, "polynomial division by zero");
    const T zero = b.zero_elem();
    if (a.degree() < b.degree()) return {Poly<T>(zero), a};
    const T lead_inv = inverse(b.lead());
    std::vector<T> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<T> quo(rem.size() - db, zero);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (is_zero(rem[i])) continue;
        const T q = rem[i] * lead_inv;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b[j];
    }
    rem.resize(db);
    return {Poly<T>(zero, std::move(quo)), Poly<T>(zero, std::move(rem))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).second;
}

/// a / b where b is known to divide a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divmod(a, b);
    require(r.is_zero(), ErrorKind::Internal, "exact polynomial division left a remainder");
    return q;
}

/// Monic gcd (zero if both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class T>
Poly<T> pow_mod(Poly<T> base, std::uint64_t e, const Poly<T>& mod) {
    Poly<T> acc = Poly<T>::constant(one_of(mod.lead()));
    base = base % mod;
    while (e) {
        if (e & 1) acc = (acc * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return acc % mod;
}

template <class T>
Poly<T> pow(Poly<T> base, std::uint64_t e) {
    Poly<T> acc = Poly<T>::constant(one_of(base.zero_elem()));
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

/// Renders with descending powers: "x^2 + (g + 1)*x + 1".
template <class T>
std::string format_poly(const Poly<T>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const T& c = p[i];
        if (is_zero(c)) continue;
        if (!first) out << " + ";
        first = false;
        const std::string cs = to_string(c);
        const bool one = c == one_of(c);
        if (i == 0) {
            out << cs;
            continue;
        }
        if (!one) {
            const bool compound = cs.find_first_of(" +-/") != std::string::npos;
            out << (compound ? "(" + cs + ")" : cs) << "*";
        }
        out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

}  // namespace orenorm
