#include "orenorm/cyclic_algebra.hpp"

#include <numeric>

namespace orenorm {

AlgebraPtr CyclicAlgebra::make(const CyclicAlgebraSpec& spec) {
    require(is_prime(spec.q), ErrorKind::InvalidAlgebra, "q must be prime");
    require(spec.n >= 2, ErrorKind::InvalidAlgebra, "n must be at least 2 so that sigma is not the identity");
    require(spec.d >= 1, ErrorKind::InvalidAlgebra, "d must be positive");
    require(std::gcd(spec.n, spec.d) == 1, ErrorKind::InvalidAlgebra, "gcd(n, d) must be 1");
    require(spec.a % spec.q != 0, ErrorKind::InvalidAlgebra, "a must be a nonzero element of F_q");
    require(spec.u % spec.q != 0, ErrorKind::InvalidAlgebra, "u must be a nonzero element of F_q");
    auto alg = std::make_shared<CyclicAlgebra>();
    alg->spec_ = spec;
    const FieldPtr Fq = GaloisField::prime(spec.q);
    FieldPtr E = GaloisField::extend(Fq, find_irreducible(Fq, static_cast<unsigned>(spec.n)), "c");
    if (spec.d >= 2) E = GaloisField::extend(E, find_irreducible(E, static_cast<unsigned>(spec.d)), "e");
    alg->E_ = E;
    alg->a_ = E->from_int(static_cast<std::int64_t>(spec.a % spec.q));
    alg->u_ = E->from_int(static_cast<std::int64_t>(spec.u % spec.q));
    // The standing assumptions, checked on the generators.
    const GfElem gen = E->generator();
    require(alg->gamma(alg->sigma(gen)) == alg->sigma(alg->gamma(gen)), ErrorKind::InvalidAlgebra,
            "gamma and sigma do not commute");
    require(alg->sigma(alg->a_) == alg->a_, ErrorKind::InvalidAlgebra, "sigma must fix a");
    const GfElem c = E->generator(1);
    GfElem cur = c;
    for (std::uint64_t i = 1; i < spec.n; ++i) {
        cur = alg->sigma(cur);
        require(cur != c, ErrorKind::InvalidAlgebra, "sigma restricted to C must have order n");
    }
    require(alg->sigma(cur) == c, ErrorKind::InvalidAlgebra, "sigma restricted to C must have order n");
    return alg;
}

GfElem CyclicAlgebra::gamma(const GfElem& e, std::uint64_t k) const {
    const std::uint64_t D = spec_.n * spec_.d;
    return frobenius(e, spec_.n * (k % D) % D);
}

GfElem CyclicAlgebra::sigma(const GfElem& e, std::uint64_t k) const {
    const std::uint64_t D = spec_.n * spec_.d;
    return frobenius(e, spec_.d * (k % D) % D);
}

std::string CyclicAlgebra::describe() const {
    return "(E/C, gamma, a) with F = F_" + std::to_string(spec_.q) + ", C = F_" + std::to_string(C()->order()) +
           ", E = F_" + std::to_string(E_->order()) + ", n = " + std::to_string(spec_.n) + ", d = " +
           std::to_string(spec_.d) + ", a = " + std::to_string(spec_.a) + ", u = " + std::to_string(spec_.u);
}

// ---- AlgebraElement ----

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<GfElem> e) : alg_(std::move(alg)), e_(std::move(e)) {
    require(alg_ != nullptr, ErrorKind::InvalidAlgebra, "algebra element without an algebra");
    require(e_.size() == alg_->d(), ErrorKind::InvalidArgument, "algebra element needs d coordinates");
    for (const auto& x : e_) require(x.field() == alg_->E(), ErrorKind::FieldMismatch, "coordinate outside E");
}

AlgebraElement AlgebraElement::from_E(AlgebraPtr alg, const GfElem& e) {
    std::vector<GfElem> v(alg->d(), alg->E()->zero());
    v[0] = e;
    return AlgebraElement(std::move(alg), std::move(v));
}

AlgebraElement AlgebraElement::z(AlgebraPtr alg) {
    if (alg->d() == 1) return from_E(alg, alg->a());
    std::vector<GfElem> v(alg->d(), alg->E()->zero());
    v[1] = alg->E()->one();
    return AlgebraElement(std::move(alg), std::move(v));
}

bool AlgebraElement::in_E() const {
    for (std::size_t i = 1; i < e_.size(); ++i)
        if (!is_zero(e_[i])) return false;
    return true;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
    require(alg_ && alg_ == o.alg_, ErrorKind::RingMismatch, "elements of different algebras");
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_same(y);
    const auto& A = *x.alg_;
    const std::size_t d = A.d();
    std::vector<GfElem> out(d, A.E()->zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(x.e_[i])) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (is_zero(y.e_[j])) continue;
            // e zⁱ · f zʲ = e γⁱ(f) z^{i+j}, and z^d = a is central.
            GfElem c = x.e_[i] * A.gamma(y.e_[j], i);
            std::size_t k = i + j;
            if (k >= d) {
                c *= A.a();
                k -= d;
            }
            out[k] += c;
        }
    }
    return AlgebraElement(x.alg_, std::move(out));
}

bool is_zero(const AlgebraElement& x) noexcept {
    for (const auto& e : x.coords())
        if (!is_zero(e)) return false;
    return true;
}

AlgebraElement zero_of(const AlgebraElement& x) { return AlgebraElement::from_E(x.algebra(), x.algebra()->E()->zero()); }
AlgebraElement one_of(const AlgebraElement& x) { return AlgebraElement::from_E(x.algebra(), x.algebra()->E()->one()); }

AlgebraElement inverse(const AlgebraElement& x) {
    const auto& A = *x.algebra();
    const GfElem zero = A.E()->zero();
    std::vector<GfElem> e0(A.d(), zero);
    e0[0] = A.E()->one();
    // y·ω(x) = coordinates of 1 means (Σ y_j zʲ)·x = 1.
    auto y = solve_row_system(omega(x), e0, zero);
    require(y.has_value(), ErrorKind::DivisionByZero, "algebra element " + to_string(x) + " is not a unit");
    return AlgebraElement(x.algebra(), std::move(*y));
}

std::string to_string(const AlgebraElement& x) {
    if (!x.algebra()) return "0";
    std::string out;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        const auto& e = x.coords()[i];
        if (is_zero(e)) continue;
        if (!out.empty()) out += " + ";
        std::string es = to_string(e);
        if (es.find_first_of(" +") != std::string::npos) es = "(" + es + ")";
        if (i == 0)
            out += es;
        else
            out += (e == one_of(e) ? "" : es + "*") + (i == 1 ? std::string("z") : "z^" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

Matrix<GfElem> omega(const AlgebraElement& x) {
    const auto& alg = x.algebra();
    const std::size_t d = alg->d();
    Matrix<GfElem> m;
    AlgebraElement zi = one_of(x);
    const AlgebraElement z = AlgebraElement::z(alg);
    for (std::size_t i = 0; i < d; ++i) {
        m.push_back((zi * x).coords());
        zi = zi * z;
    }
    return m;
}

// ---- A[t;σ] ----

AlgebraRing make_algebra_ring(const AlgebraPtr& alg) {
    auto ring = std::make_shared<SkewRing<AlgebraElement>>();
    const FieldPtr& E = alg->E();
    ring->kind = RingKind::Sigma;
    ring->zero = AlgebraElement::from_E(alg, E->zero());
    ring->one = AlgebraElement::from_E(alg, E->one());
    ring->center_degree = alg->n();
    ring->sigma_power = alg->d() % (alg->n() * alg->d());
    ring->u = AlgebraElement::from_E(alg, alg->u());
    ring->sigma_pow = [alg](const AlgebraElement& x, std::uint64_t k) {
        std::vector<GfElem> v;
        for (const auto& e : x.coords()) v.push_back(alg->sigma(e, k));
        return AlgebraElement(alg, std::move(v));
    };
    ring->in_center_field = [alg](const AlgebraElement& x) { return x.in_E() && alg->in_F(x[0]); };
    ring->flatten = [E](const AlgebraElement& x) {
        std::vector<GfElem> v;
        for (const auto& e : x.coords())
            for (auto c : E->coords(e)) v.push_back(E->element(c));
        return v;
    };
    ring->embed_scalar = [alg](const GfElem& s) { return AlgebraElement::from_E(alg, s); };
    ring->scalar_basis = {ring->one};
    for (unsigned k = 1; k <= E->depth(); ++k) ring->generators.push_back(AlgebraElement::from_E(alg, E->generator(k)));
    ring->generators.push_back(AlgebraElement::z(alg));
    ring->center_field_order = alg->q();
    ring->x_definition = "u^-1 t^n";
    ring->description = "A[t; sigma], A = " + alg->describe();
    return ring;
}

Matrix<Poly<GfElem>> omega_rho(const AlgebraPoly& f) {
    const auto& alg = f.ring()->one.algebra();
    const std::size_t n = alg->n(), d = alg->d();
    const GfElem zero = alg->E()->zero();
    const auto rho = build_rho(f);
    Matrix<Poly<GfElem>> out(n * d, std::vector<Poly<GfElem>>(n * d, Poly<GfElem>(zero)));
    for (std::size_t I = 0; I < n; ++I)
        for (std::size_t J = 0; J < n; ++J) {
            const auto& entry = rho[I][J];
            for (std::size_t k = 0; k < entry.size(); ++k) {
                if (is_zero(entry[k])) continue;
                const auto w = omega(entry[k]);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t s = 0; s < d; ++s)
                        if (!is_zero(w[r][s])) {
                            auto& cell = out[I * d + r][J * d + s];
                            cell.set(k, cell[k] + w[r][s]);
                        }
            }
        }
    return out;
}

CentralPolynomial<GfElem> algebra_norm(const AlgebraPoly& f) {
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "norm of the zero polynomial");
    const auto& alg = f.ring()->one.algebra();
    auto det = det_bareiss(omega_rho(f), alg->E()->zero());
    for (const auto& c : det.coeffs())
        require(alg->in_F(c), ErrorKind::NormNotCentral, "coefficient " + to_string(c) + " is not in F_q");
    return {std::move(det), f.ring()->x_definition};
}

DegreeReport verify_degree_dm(const AlgebraPoly& f) {
    const auto& alg = f.ring()->one.algebra();
    DegreeReport rep;
    rep.expected = static_cast<int>(alg->d()) * f.degree();
    rep.actual = algebra_norm(f).degree();
    return rep;
}

CoefficientReport verify_E_coefficient_formula(const AlgebraPoly& f) {
    const auto& alg = f.ring()->one.algebra();
    for (const auto& c : f.coeffs())
        require(c.in_E(), ErrorKind::InvalidArgument, "the coefficient formula needs coefficients in E");
    const auto N = algebra_norm(f);
    const std::uint64_t n = alg->n(), d = alg->d();
    CoefficientReport rep;
    rep.m = f.degree();
    rep.k = rep.m / static_cast<int>(n);
    rep.r = rep.m % static_cast<int>(n);
    const GfElem one = alg->E()->one();
    rep.constant_expected = relative_norm(f[0][0], 0);
    rep.constant_actual = N.poly[0];
    rep.constant_ok = rep.constant_expected == rep.constant_actual;
    rep.leading_actual = N.poly.is_zero() ? alg->E()->zero() : N.poly.lead();
    const GfElem nu = relative_norm(alg->u(), 1);
    const GfElem lead_norm = relative_norm(f.lead()[0], 0);
    const auto sign = [&](std::uint64_t e) { return e % 2 == 0 ? one : -one; };
    const std::uint64_t m = static_cast<std::uint64_t>(rep.m), r = static_cast<std::uint64_t>(rep.r);
    rep.leading_stated = sign(d * r * (n - 1)) * lead_norm * nu.pow(r);
    rep.leading_full = sign(d * m * (n - 1)) * lead_norm * nu.pow(m);
    const bool degree_ok = N.degree() == static_cast<int>(d * m);
    rep.stated_ok = degree_ok && rep.leading_actual == rep.leading_stated;
    rep.full_ok = degree_ok && rep.leading_actual == rep.leading_full;
    return rep;
}

DividesReport verify_divides(const AlgebraPoly& f) {
    const auto& ring = f.ring();
    (void)inverse(f.lead());  // DivisionByZero unless the leading coefficient is a unit
    const auto N = algebra_norm(f);
    Poly<AlgebraElement> lifted(ring->zero);
    for (std::size_t i = 0; i < N.poly.size(); ++i) lifted.set(i, ring->embed_scalar(N.poly[i]));
    const auto lowered = lower(ring, lifted);
    auto [q, r] = right_divide(lowered, f);
    require(r.is_zero(), ErrorKind::NonzeroRemainder, "f does not right-divide N(f) in A[t;sigma]");
    return {true, q};
}

SubringPowerReport field_coefficient_reducibility(const AlgebraPoly& f) {
    const auto& alg = f.ring()->one.algebra();
    SubringPowerReport rep;
    rep.coefficients_in_C = true;
    for (const auto& c : f.coeffs()) rep.coefficients_in_C = rep.coefficients_in_C && c.in_E() && alg->in_C(c[0]);
    rep.norm = algebra_norm(f).poly;
    if (!rep.coefficients_in_C) return rep;
    const FieldPtr C = alg->C();
    const FieldPtr& E = alg->E();
    const auto sub = make_sigma_ring(C, alg->d(), E->project(alg->u(), 1));
    std::vector<GfElem> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(E->project(c[0], 1));
    const auto sub_norm = reduced_norm(SigmaPoly(sub, coeffs)).poly;
    Poly<GfElem> lifted(E->zero());
    for (std::size_t i = 0; i < sub_norm.size(); ++i) lifted.set(i, E->lift(sub_norm[i]));
    rep.subring_norm = lifted;
    rep.dth_power_ok = rep.norm == orenorm::pow(lifted, alg->d());
    if (alg->d() >= 2 && f.degree() >= 1 && rep.dth_power_ok) {
        rep.reducible = true;
        rep.predicted_min_factors = static_cast<int>(alg->d());
    }
    return rep;
}

}  // namespace orenorm
