#include "orenorm/function_field.hpp"

#include "orenorm/linalg.hpp"

namespace orenorm {

FunctionFieldPtr make_function_field(FieldPtr base, std::string var) {
    require(base != nullptr, ErrorKind::InvalidArgument, "function field needs a base field");
    return std::make_shared<const FunctionField>(FunctionField{std::move(base), std::move(var)});
}

RationalFunction::RationalFunction(FunctionFieldPtr ff, Poly<GfElem> num, Poly<GfElem> den)
    : ff_(std::move(ff)), num_(std::move(num)), den_(std::move(den)) {
    require(ff_ != nullptr, ErrorKind::FieldMismatch, "rational function without a field");
    require(!den_.is_zero(), ErrorKind::DivisionByZero, "zero denominator");
    normalize();
}

RationalFunction RationalFunction::from_poly(FunctionFieldPtr ff, Poly<GfElem> num) {
    const auto one = ff->base->one();
    return RationalFunction(std::move(ff), std::move(num), Poly<GfElem>::constant(one));
}

RationalFunction RationalFunction::constant(FunctionFieldPtr ff, const GfElem& c) {
    require(c.field() == ff->base, ErrorKind::FieldMismatch, "constant outside the base field");
    return from_poly(std::move(ff), Poly<GfElem>::constant(c));
}

RationalFunction RationalFunction::variable(FunctionFieldPtr ff) {
    const auto one = ff->base->one();
    return from_poly(std::move(ff), Poly<GfElem>::variable(one));
}

void RationalFunction::normalize() {
    const auto zero = ff_->base->zero();
    if (num_.is_zero()) {
        num_ = Poly<GfElem>(zero);
        den_ = Poly<GfElem>::constant(ff_->base->one());
        return;
    }
    const auto g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const GfElem lc = den_.lead();
    if (lc != ff_->base->one()) {
        const GfElem inv = lc.inv();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

void RationalFunction::check_same(const RationalFunction& o) const {
    require(ff_ && o.ff_ && ff_->base == o.ff_->base, ErrorKind::FieldMismatch,
            "rational functions over different fields");
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    check_same(o);
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    check_same(o);
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inv(); }

RationalFunction RationalFunction::inv() const {
    require(ff_ != nullptr && !num_.is_zero(), ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(ff_, den_, num_);
}

RationalFunction RationalFunction::pow(std::uint64_t e) const {
    RationalFunction acc = one_of(*this);
    RationalFunction b = *this;
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

RationalFunction RationalFunction::d_du() const {
    const auto dn = num_.derivative();
    const auto dd = den_.derivative();
    return RationalFunction(ff_, dn * den_ - num_ * dd, den_ * den_);
}

GfElem RationalFunction::eval(const GfElem& at) const {
    const GfElem d = den_.eval(at);
    require(!is_zero(d), ErrorKind::DivisionByZero, "evaluation at a pole");
    return num_.eval(at) / d;
}

bool is_zero(const RationalFunction& a) noexcept { return a.num().is_zero(); }
RationalFunction zero_of(const RationalFunction& a) { return RationalFunction::constant(a.ff(), a.ff()->base->zero()); }
RationalFunction one_of(const RationalFunction& a) { return RationalFunction::constant(a.ff(), a.ff()->base->one()); }
RationalFunction inverse(const RationalFunction& a) { return a.inv(); }

std::string to_string(const RationalFunction& a) {
    if (!a.ff()) return "0";
    const std::string n = format_poly(a.num(), a.ff()->var);
    if (a.is_polynomial()) return n;
    const std::string d = format_poly(a.den(), a.ff()->var);
    auto wrap = [](const std::string& s) { return s.find_first_of(" +*^") != std::string::npos ? "(" + s + ")" : s; };
    return wrap(n) + "/" + wrap(d);
}

std::optional<RationalFunction> enumeration_point(const RationalFunction& proto, std::size_t i) {
    const auto& base = proto.ff()->base;
    Poly<GfElem> p(base->zero());
    for (std::size_t k = 0; i > 0; ++k, i /= base->order()) p.set(k, base->element(i % base->order()));
    return RationalFunction::from_poly(proto.ff(), std::move(p));
}

// ---- Derivation ----

Derivation Derivation::make(const RationalFunction& image_u, std::optional<std::vector<RationalFunction>> min_poly) {
    require(image_u.ff() != nullptr, ErrorKind::InvalidDerivation, "derivation needs a function field");
    require(!is_zero(image_u), ErrorKind::InvalidDerivation, "the zero derivation has no finite constant extension");
    Derivation d;
    d.image_u_ = image_u;
    const std::uint64_t p = image_u.ff()->base->characteristic();
    if (min_poly) {
        require(check_min_poly(d, *min_poly), ErrorKind::InvalidDerivation,
                "supplied polynomial is not the minimum polynomial of the derivation");
        d.lin_ = *min_poly;
        return d;
    }
    // δ^p is again a derivation of F_q(u), hence δ^p = λδ with δ(λ) = 0, and g = t^p − λt.
    const RationalFunction u = RationalFunction::variable(image_u.ff());
    const RationalFunction lambda = d.apply(u, p) / image_u;
    d.lin_ = {-lambda, one_of(u)};
    require(check_min_poly(d, d.lin_), ErrorKind::Internal, "derived minimum polynomial failed verification");
    return d;
}

std::uint64_t Derivation::min_poly_degree() const {
    const std::uint64_t p = ff()->base->characteristic();
    std::uint64_t deg = 1;
    for (std::size_t i = 1; i < lin_.size(); ++i) deg *= p;
    return deg;
}

std::vector<RationalFunction> Derivation::min_poly_dense() const {
    const std::uint64_t p = ff()->base->characteristic();
    std::vector<RationalFunction> dense(min_poly_degree() + 1, zero_of(image_u_));
    std::uint64_t pos = 1;
    for (const auto& c : lin_) {
        dense[pos] = c;
        pos *= p;
    }
    return dense;
}

RationalFunction Derivation::apply(const RationalFunction& f, std::uint64_t times) const {
    RationalFunction cur = f;
    for (std::uint64_t i = 0; i < times && !is_zero(cur); ++i) cur = image_u_ * cur.d_du();
    return cur;
}

bool Derivation::is_constant(const RationalFunction& f) const { return is_zero(apply(f)); }

std::vector<RationalFunction> Derivation::flatten(const RationalFunction& f) const {
    const auto& ffp = ff();
    const std::uint64_t p = ffp->base->characteristic();
    // f = N·D^{p-1} / D^p, and D^p ∈ F_q[u^p].
    const Poly<GfElem> m = f.num() * orenorm::pow(f.den(), p - 1);
    const Poly<GfElem> dp = orenorm::pow(f.den(), p);
    const GfElem zero = ffp->base->zero();
    std::vector<RationalFunction> out;
    out.reserve(p);
    for (std::uint64_t j = 0; j < p; ++j) {
        Poly<GfElem> part(zero);
        for (std::uint64_t k = j; k < m.size(); k += p) part.set(k - j, m[k]);
        out.emplace_back(ffp, std::move(part), dp);
    }
    return out;
}

std::string Derivation::describe() const {
    return "(" + to_string(image_u_) + ")*d/d" + ff()->var;
}

bool check_min_poly(const Derivation& d, const std::vector<RationalFunction>& lin) {
    if (lin.empty() || lin.back() != one_of(d.image_u())) return false;
    for (const auto& c : lin)
        if (!d.is_constant(c)) return false;
    const std::uint64_t p = d.ff()->base->characteristic();
    const RationalFunction u = RationalFunction::variable(d.ff());
    std::vector<RationalFunction> images;  // δ^{p^i}(u)
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < lin.size(); ++i) {
        images.push_back(d.apply(u, power));
        power *= p;
    }
    RationalFunction acc = zero_of(u);
    for (std::size_t i = 0; i < lin.size(); ++i) acc += lin[i] * images[i];
    if (!is_zero(acc)) return false;
    // Minimality: δ^{p^0}(u), …, δ^{p^{e-1}}(u) independent over the constants.
    IncrementalBasis<RationalFunction> basis(zero_of(u));
    for (std::size_t i = 0; i + 1 < lin.size(); ++i)
        if (!basis.add(d.flatten(images[i]))) return false;
    return true;
}

}  // namespace orenorm
