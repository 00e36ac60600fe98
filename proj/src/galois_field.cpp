#include "orenorm/galois_field.hpp"

#include <algorithm>
#include <limits>

#include "orenorm/poly.hpp"

namespace orenorm {

namespace {

std::uint64_t ipow_checked(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        require(r <= (std::numeric_limits<std::uint64_t>::max() >> 1) / base, ErrorKind::FieldTooLarge,
                "field order exceeds 2^63");
        r *= base;
    }
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- GfElem ----

GfElem::GfElem(FieldPtr field, std::uint64_t index) : field_(std::move(field)), v_(index) {
    require(field_ != nullptr, ErrorKind::FieldMismatch, "element without a field");
    require(v_ < field_->order(), ErrorKind::InvalidArgument, "element index out of range");
}

const GaloisField& GfElem::checked_field() const {
    require(field_ != nullptr, ErrorKind::FieldMismatch, "uninitialized field element");
    return *field_;
}

void GfElem::check_same(const GfElem& o) const {
    require(field_ && field_ == o.field_, ErrorKind::FieldMismatch, "operands belong to different fields");
}

GfElem GfElem::operator-() const {
    const auto& f = checked_field();
    return GfElem(field_, f.neg(v_));
}
GfElem& GfElem::operator+=(const GfElem& o) {
    check_same(o);
    v_ = field_->add(v_, o.v_);
    return *this;
}
GfElem& GfElem::operator-=(const GfElem& o) {
    check_same(o);
    v_ = field_->sub(v_, o.v_);
    return *this;
}
GfElem& GfElem::operator*=(const GfElem& o) {
    check_same(o);
    v_ = field_->mul(v_, o.v_);
    return *this;
}
GfElem& GfElem::operator/=(const GfElem& o) {
    check_same(o);
    require(o.v_ != 0, ErrorKind::DivisionByZero, "division by zero field element");
    v_ = field_->mul(v_, field_->inv(o.v_));
    return *this;
}

bool operator==(const GfElem& a, const GfElem& b) noexcept {
    return a.v_ == b.v_ && (a.field_ == b.field_ || !a.field_ || !b.field_);
}

GfElem GfElem::pow(std::uint64_t e) const { return GfElem(field_, checked_field().pow(v_, e)); }

GfElem GfElem::inv() const {
    const auto& f = checked_field();
    require(v_ != 0, ErrorKind::DivisionByZero, "inverse of zero");
    return GfElem(field_, f.inv(v_));
}

bool is_zero(const GfElem& a) noexcept { return a.index() == 0; }
GfElem zero_of(const GfElem& a) { return GfElem(a.field(), 0); }
GfElem one_of(const GfElem& a) { return GfElem(a.field(), 1); }
GfElem inverse(const GfElem& a) { return a.inv(); }
std::string to_string(const GfElem& a) {
    if (!a.field()) return "0";
    return a.field()->format(a.index());
}

// ---- GaloisField construction ----

FieldPtr GaloisField::prime(std::uint64_t p) {
    require(is_prime(p), ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    require(p < (1ull << 31), ErrorKind::FieldTooLarge, "characteristic must be below 2^31");
    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = p;
    f->order_ = p;
    f->degree_ = 1;
    f->depth_ = 0;
    f->step_degree_ = 1;
    return f;
}

FieldPtr GaloisField::extend(const FieldPtr& base, const std::vector<GfElem>& modulus, std::string name) {
    require(base != nullptr, ErrorKind::InvalidModulus, "missing base field");
    require(modulus.size() >= 3, ErrorKind::InvalidModulus, "modulus must have degree >= 2");
    for (const auto& c : modulus)
        require(c.field() == base, ErrorKind::InvalidModulus, "modulus coefficient outside the base level");
    require(modulus.back() == base->one(), ErrorKind::InvalidModulus, "modulus must be monic");
    const unsigned level = base->depth() + 1;
    require(is_irreducible_over(base, modulus), ErrorKind::ReducibleModulus,
            "modulus at level " + std::to_string(level) + " is reducible");

    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = base->characteristic();
    f->base_ = base;
    f->depth_ = level;
    f->step_degree_ = static_cast<unsigned>(modulus.size() - 1);
    f->degree_ = base->degree() * f->step_degree_;
    f->base_order_ = base->order();
    f->order_ = ipow_checked(f->p_, f->degree_);
    f->name_ = std::move(name);
    for (const auto& c : modulus) f->modulus_.push_back(c.index());
    if (f->order_ <= kTableLimit) f->build_tables();
    return f;
}

FieldPtr GaloisField::make(std::uint64_t p, const std::vector<std::vector<std::uint64_t>>& tower,
                           std::vector<std::string> names) {
    FieldPtr f = prime(p);
    if (names.empty()) {
        for (std::size_t i = 0; i + 1 < tower.size(); ++i) names.push_back("g" + std::to_string(i + 1));
        if (!tower.empty()) names.push_back("g");
    }
    require(names.size() == tower.size(), ErrorKind::InvalidArgument, "one generator name per tower step");
    for (std::size_t k = 0; k < tower.size(); ++k) {
        std::vector<GfElem> mod;
        for (auto c : tower[k]) {
            require(c < f->order(), ErrorKind::InvalidModulus,
                    "modulus coefficient out of range at level " + std::to_string(k + 1));
            mod.push_back(f->element(c));
        }
        f = extend(f, mod, names[k]);
    }
    return f;
}

void GaloisField::build_tables() {
    const std::uint64_t m = order_ - 1;
    const auto factors = prime_factors(m);
    std::uint64_t gen = 0;
    for (std::uint64_t c = 1; c < order_ && gen == 0; ++c) {
        bool primitive = true;
        for (auto r : factors)
            if (slow_pow(c, m / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) gen = c;
    }
    require(gen != 0, ErrorKind::Internal, "no primitive element found");
    exp_.assign(m, 0);
    log_.assign(order_, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        exp_[i] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, gen);
    }
}

// ---- accessors ----

FieldPtr GaloisField::level(unsigned k) const {
    require(k <= depth_, ErrorKind::NotASubfieldLevel,
            "level " + std::to_string(k) + " exceeds tower depth " + std::to_string(depth_));
    FieldPtr f = shared_from_this();
    while (f->depth() > k) f = f->base();
    return f;
}

unsigned GaloisField::level_degree(unsigned k) const { return level(k)->degree(); }

std::vector<GfElem> GaloisField::modulus() const {
    std::vector<GfElem> out;
    for (auto c : modulus_) out.push_back(base_->element(c));
    return out;
}

GfElem GaloisField::zero() const { return GfElem(shared_from_this(), 0); }
GfElem GaloisField::one() const { return GfElem(shared_from_this(), 1); }

GfElem GaloisField::from_int(std::int64_t c) const {
    const auto p = static_cast<std::int64_t>(p_);
    return GfElem(shared_from_this(), static_cast<std::uint64_t>(((c % p) + p) % p));
}

GfElem GaloisField::element(std::uint64_t index) const { return GfElem(shared_from_this(), index); }

GfElem GaloisField::generator(unsigned k) const {
    require(k >= 1 && k <= depth_, ErrorKind::NotASubfieldLevel, "no generator at level " + std::to_string(k));
    // The generator of level k is the index base_order(k) in level k, i.e. digit 1 at position 1.
    return GfElem(shared_from_this(), level(k - 1)->order());
}

std::vector<std::uint64_t> GaloisField::coords(const GfElem& a) const {
    std::vector<std::uint64_t> out(degree_);
    std::uint64_t v = a.index();
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

GfElem GaloisField::from_coords(const std::vector<std::uint64_t>& c) const {
    require(c.size() <= degree_, ErrorKind::InvalidArgument, "too many coordinates");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
    return element(v);
}

std::vector<GfElem> GaloisField::base_coeffs(const GfElem& a) const {
    require(depth_ >= 1, ErrorKind::NotASubfieldLevel, "prime field has no base");
    std::vector<GfElem> out;
    std::uint64_t v = a.index();
    for (unsigned i = 0; i < step_degree_; ++i) {
        out.push_back(base_->element(v % base_order_));
        v /= base_order_;
    }
    return out;
}

GfElem GaloisField::from_base_coeffs(const std::vector<GfElem>& c) const {
    require(depth_ >= 1 && c.size() <= step_degree_, ErrorKind::InvalidArgument, "bad base coefficient list");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        require(c[i].field() == base_ || is_zero(c[i]), ErrorKind::FieldMismatch, "coefficient outside base");
        v = v * base_order_ + c[i].index();
    }
    return element(v);
}

GfElem GaloisField::lift(const GfElem& a) const {
    require(a.field() != nullptr, ErrorKind::FieldMismatch, "uninitialized element");
    const auto k = a.field()->depth();
    require(k <= depth_ && level(k) == a.field(), ErrorKind::FieldMismatch, "element is not from a tower level");
    return element(a.index());
}

bool GaloisField::in_level(const GfElem& a, unsigned k) const {
    return a.field().get() == this && a.index() < level(k)->order();
}

GfElem GaloisField::project(const GfElem& a, unsigned k) const {
    require(in_level(a, k), ErrorKind::NotASubfieldLevel, "element does not lie in level " + std::to_string(k));
    return level(k)->element(a.index());
}

std::string GaloisField::format(std::uint64_t v) const {
    if (depth_ == 0) return std::to_string(v);
    std::vector<std::uint64_t> digits;
    for (unsigned i = 0; i < step_degree_; ++i) {
        digits.push_back(v % base_order_);
        v /= base_order_;
    }
    std::string out;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = base_->format(digits[i]);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (digits[i] != 1) out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += name_;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// ---- raw arithmetic ----

std::uint64_t GaloisField::add(std::uint64_t a, std::uint64_t b) const {
    if (depth_ == 0) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::uint64_t GaloisField::neg(std::uint64_t a) const {
    if (depth_ == 0) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    std::uint64_t r = 0, scale = 1;
    while (a) {
        const auto d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

std::uint64_t GaloisField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const {
    if (depth_ == 0) return a * b % p_;
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        const std::uint64_t m = order_ - 1;
        return exp_[(log_[a] + log_[b]) % m];
    }
    return slow_mul(a, b);
}

std::uint64_t GaloisField::slow_mul(std::uint64_t a, std::uint64_t b) const {
    if (depth_ == 0) return a * b % p_;
    const unsigned s = step_degree_;
    std::vector<std::uint64_t> da(s), db(s), prod(2 * s - 1, 0);
    for (unsigned i = 0; i < s; ++i) {
        da[i] = a % base_order_;
        a /= base_order_;
        db[i] = b % base_order_;
        b /= base_order_;
    }
    for (unsigned i = 0; i < s; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < s; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
    for (unsigned k = 2 * s - 1; k-- > s;) {
        const auto c = prod[k];
        if (c == 0) continue;
        for (unsigned j = 0; j < s; ++j) prod[k - s + j] = base_->sub(prod[k - s + j], base_->mul(c, modulus_[j]));
        prod[k] = 0;
    }
    std::uint64_t r = 0;
    for (unsigned i = s; i-- > 0;) r = r * base_order_ + prod[i];
    return r;
}

std::uint64_t GaloisField::slow_pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t GaloisField::pow(std::uint64_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (depth_ == 0) return powmod(a, e, p_);
    if (!exp_.empty()) {
        const std::uint64_t m = order_ - 1;
        return exp_[mulmod(log_[a], e % m, m)];
    }
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
    require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
    if (depth_ == 0) return powmod(a, p_ - 2, p_);
    if (!exp_.empty()) {
        const std::uint64_t m = order_ - 1;
        return exp_[(m - log_[a]) % m];
    }
    return pow(a, order_ - 2);
}

std::uint64_t GaloisField::frobenius(std::uint64_t a, std::uint64_t j) const {
    j %= degree_;
    if (a == 0 || j == 0 || depth_ == 0) return a;
    if (!exp_.empty()) {
        const std::uint64_t m = order_ - 1;
        return exp_[mulmod(log_[a], powmod(p_, j, m), m)];
    }
    for (std::uint64_t i = 0; i < j; ++i) a = pow(a, p_);
    return a;
}

// ---- serialization ----

nlohmann::json GaloisField::to_json() const {
    std::vector<FieldPtr> chain;
    for (FieldPtr f = shared_from_this(); f->depth() > 0; f = f->base()) chain.push_back(f);
    std::reverse(chain.begin(), chain.end());
    nlohmann::json tower = nlohmann::json::array();
    nlohmann::json names = nlohmann::json::array();
    for (const auto& f : chain) {
        nlohmann::json mod = nlohmann::json::array();
        for (auto c : f->modulus_) {
            if (f->depth() == 1) {
                mod.push_back(c);
            } else {
                mod.push_back(f->base()->coords(f->base()->element(c)));
            }
        }
        tower.push_back(mod);
        names.push_back(f->name());
    }
    return {{"p", p_}, {"tower", tower}, {"names", names}};
}

FieldPtr GaloisField::from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("p") && j.contains("tower"), ErrorKind::ParseError,
            "field JSON needs \"p\" and \"tower\"");
    FieldPtr f = prime(j.at("p").get<std::uint64_t>());
    const auto& tower = j.at("tower");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (names.empty()) {
        for (std::size_t i = 0; i + 1 < tower.size(); ++i) names.push_back("g" + std::to_string(i + 1));
        if (!tower.empty()) names.push_back("g");
    }
    require(names.size() == tower.size(), ErrorKind::ParseError, "one generator name per tower step");
    for (std::size_t k = 0; k < tower.size(); ++k) {
        std::vector<GfElem> mod;
        for (const auto& c : tower[k]) {
            if (c.is_array()) {
                mod.push_back(f->from_coords(c.get<std::vector<std::uint64_t>>()));
            } else {
                mod.push_back(f->from_int(c.get<std::int64_t>()));
            }
        }
        f = extend(f, mod, names[k]);
    }
    return f;
}

// ---- free functions ----

GfElem frobenius(const GfElem& a, std::uint64_t j) {
    require(a.field() != nullptr, ErrorKind::FieldMismatch, "uninitialized element");
    return GfElem(a.field(), a.field()->frobenius(a.index(), j));
}

GfElem conjugate_product(const GfElem& a, std::uint64_t sigma_power, std::uint64_t n) {
    GfElem acc = one_of(a);
    GfElem conj = a;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc *= conj;
        conj = frobenius(conj, sigma_power);
    }
    return acc;
}

GfElem relative_norm(const GfElem& a, unsigned level) {
    require(a.field() != nullptr, ErrorKind::FieldMismatch, "uninitialized element");
    const auto& K = *a.field();
    require(level <= K.depth(), ErrorKind::NotASubfieldLevel,
            "level " + std::to_string(level) + " is not a subfield level of a depth-" + std::to_string(K.depth()) +
                " tower");
    const unsigned f_deg = K.level_degree(level);
    const GfElem r = conjugate_product(a, f_deg, K.degree() / f_deg);
    require(K.in_level(r, level), ErrorKind::Internal, "relative norm left the subfield");
    return r;
}

std::optional<GfElem> enumeration_point(const GfElem& proto, std::size_t i) {
    require(proto.field() != nullptr, ErrorKind::FieldMismatch, "uninitialized element");
    if (i >= proto.field()->order()) return std::nullopt;
    return proto.field()->element(i);
}

bool is_irreducible_over(const FieldPtr& base, const std::vector<GfElem>& monic) {
    const GfElem zero = base->zero();
    Poly<GfElem> f(zero, monic);
    const int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const auto df = f.derivative();
    if (df.is_zero()) return false;
    if (gcd(f, df).degree() > 0) return false;
    if (d <= 3 && base->order() <= GaloisField::kTableLimit) {
        for (std::uint64_t i = 0; i < base->order(); ++i)
            if (is_zero(f.eval(base->element(i)))) return false;
        return true;
    }
    const auto x = Poly<GfElem>::variable(zero);
    Poly<GfElem> h = x;
    for (int i = 1; 2 * i <= d; ++i) {
        h = pow_mod(h, base->order(), f);
        if (gcd(h - x, f).degree() > 0) return false;
    }
    return true;
}

std::vector<GfElem> find_irreducible(const FieldPtr& base, unsigned degree) {
    require(degree >= 1, ErrorKind::InvalidArgument, "degree must be positive");
    const std::uint64_t q = base->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        require(count <= std::numeric_limits<std::uint64_t>::max() / q, ErrorKind::FieldTooLarge,
                "search space too large");
        count *= q;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<GfElem> coeffs;
        std::uint64_t v = idx;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs.push_back(base->element(v % q));
            v /= q;
        }
        coeffs.push_back(base->one());
        if (is_irreducible_over(base, coeffs)) return coeffs;
    }
    fail(ErrorKind::Internal, "no irreducible polynomial found");
}

}  // namespace orenorm
