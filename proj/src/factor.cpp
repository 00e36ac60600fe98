#include "orenorm/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace orenorm {

namespace {

using P = Poly<GfElem>;

struct SubfieldCtx {
    const std::vector<GfElem>& basis;
    std::uint64_t order;
    std::uint64_t p;
    std::mt19937_64 rng;
};

std::vector<std::uint64_t> poly_key(const P& f) {
    std::vector<std::uint64_t> k{static_cast<std::uint64_t>(f.degree() + 1)};
    for (std::size_t i = f.size(); i-- > 0;) k.push_back(f[i].index());
    return k;
}

GfElem random_in_subfield(SubfieldCtx& ctx, const GfElem& zero) {
    GfElem acc = zero;
    for (const auto& b : ctx.basis) acc += zero.field()->from_int(static_cast<std::int64_t>(ctx.rng() % ctx.p)) * b;
    return acc;
}

/// c(x) = Σ c_k x^{pk} ↦ Σ c_k^{1/p} x^k, with a^{1/p} = a^{|F|/p} in F.
P pth_root(const P& c, const SubfieldCtx& ctx) {
    P out(c.zero_elem());
    for (std::size_t k = 0; k < c.size(); k += ctx.p) out.set(k / ctx.p, c[k].pow(ctx.order / ctx.p));
    return out;
}

void squarefree(const P& f, int mult, const SubfieldCtx& ctx, std::vector<std::pair<P, int>>& out) {
    if (f.degree() < 1) return;
    const P df = f.derivative();
    if (df.is_zero()) {
        squarefree(pth_root(f, ctx), mult * static_cast<int>(ctx.p), ctx, out);
        return;
    }
    P c = gcd(f, df);
    P w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        const P y = gcd(w, c);
        const P fac = exact_div(w, y);
        if (fac.degree() > 0) out.emplace_back(fac, i * mult);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (c.degree() > 0) squarefree(pth_root(c, ctx), mult * static_cast<int>(ctx.p), ctx, out);
}

std::vector<std::pair<P, int>> distinct_degree(P f, const SubfieldCtx& ctx) {
    std::vector<std::pair<P, int>> out;
    const P x = P::variable(f.lead());
    P h = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = pow_mod(h, ctx.order, f);
        const P g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = exact_div(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const P& f, int d, SubfieldCtx& ctx, std::vector<P>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const GfElem zero = f.zero_elem();
    const GfElem one = one_of(zero);
    for (;;) {
        P a(zero);
        for (int i = 0; i < f.degree(); ++i) a.set(i, random_in_subfield(ctx, zero));
        if (a.degree() < 1) continue;
        P b(zero);
        if (ctx.p == 2) {
            // Absolute trace to F_2: Σ a^{2^i}, i < log2(|F|)·d.
            std::uint64_t k = 0;
            for (std::uint64_t q = ctx.order; q > 1; q /= 2) ++k;
            P term = a % f;
            for (std::uint64_t i = 0; i < k * static_cast<std::uint64_t>(d); ++i) {
                b += term;
                term = (term * term) % f;
            }
        } else {
            // a^{(Q^d - 1)/2} = (a·a^Q⋯a^{Q^{d-1}})^{(Q-1)/2}
            P conj = a % f;
            P prod = conj;
            for (int i = 1; i < d; ++i) {
                conj = pow_mod(conj, ctx.order, f);
                prod = (prod * conj) % f;
            }
            b = pow_mod(prod, (ctx.order - 1) / 2, f) - P::constant(one);
        }
        const P g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, ctx, out);
            equal_degree(exact_div(f, g), d, ctx, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly<GfElem>> factor_over_subfield(const Poly<GfElem>& h, const std::vector<GfElem>& basis,
                                               std::uint64_t order, std::uint64_t seed,
                                               std::vector<int>* multiplicities) {
    require(h.degree() >= 1, ErrorKind::InvalidArgument, "factoring needs a polynomial of positive degree");
    SubfieldCtx ctx{basis, order, h.lead().field()->characteristic(), std::mt19937_64(seed)};
    std::vector<std::pair<P, int>> sqf;
    squarefree(h.monic(), 1, ctx, sqf);
    std::vector<std::pair<P, int>> found;
    for (const auto& [part, mult] : sqf)
        for (const auto& [block, d] : distinct_degree(part, ctx)) {
            std::vector<P> pieces;
            equal_degree(block, d, ctx, pieces);
            for (auto& piece : pieces) found.emplace_back(std::move(piece), mult);
        }
    std::map<std::vector<std::uint64_t>, std::pair<P, int>> merged;
    for (auto& [fac, mult] : found) {
        auto [it, fresh] = merged.try_emplace(poly_key(fac), fac, 0);
        it->second.second += mult;
    }
    std::vector<P> out;
    if (multiplicities) multiplicities->clear();
    for (auto& [key, val] : merged) {
        out.push_back(val.first);
        if (multiplicities) multiplicities->push_back(val.second);
    }
    return out;
}

std::vector<CentralFactor<GfElem>> factor_central(const SigmaRing& ring, const Poly<GfElem>& h, std::uint64_t seed) {
    std::vector<int> mult;
    const auto polys = factor_over_subfield(h, ring->scalar_basis, ring->center_field_order, seed, &mult);
    std::vector<CentralFactor<GfElem>> out;
    for (std::size_t i = 0; i < polys.size(); ++i) out.push_back({make_central(ring, polys[i]), mult[i]});
    return out;
}

std::vector<CentralFactor<RationalFunction>> factor_central(const DeltaRing&, const Poly<RationalFunction>&,
                                                            std::uint64_t) {
    fail(ErrorKind::InfiniteConstantField,
         "central factorization over F_q(u^p) is not available; supply a factorization of N(f)");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "irreducible";
        case Verdict::Reducible: return "reducible";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string route_name(Route r) {
    switch (r) {
        case Route::None: return "none";
        case Route::Degree1: return "degree-1";
        case Route::NormIrreducible: return "norm-irreducible";
        case Route::CriterionCentral: return "criterion+central-factorization";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

std::optional<SigmaPoly> search_right_factor(const SigmaPoly& f, int d, std::uint64_t budget) {
    const auto& ring = f.ring();
    const FieldPtr& K = ring->zero.field();
    const std::uint64_t q = K->order();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        require(total <= budget / q, ErrorKind::BudgetExceeded,
                "right factor search needs more than " + std::to_string(budget) + " candidates");
        total *= q;
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<GfElem> c;
        std::uint64_t rest = idx;
        for (int i = 0; i < d; ++i, rest /= q) c.push_back(K->element(rest % q));
        c.push_back(K->one());
        SigmaPoly g(ring, std::move(c));
        if (right_remainder(f, g).is_zero()) return g;
    }
    return std::nullopt;
}

namespace {

struct NormData {
    std::vector<CentralPolynomial<GfElem>> expanded;
};

NormData prepare(const SigmaPoly& f, std::uint64_t seed) {
    require(!f.is_zero() && f.degree() >= 1, ErrorKind::InvalidArgument, "factoring needs a polynomial of positive degree");
    const auto& ring = f.ring();
    require(gcrd_with_t(f).degree() == 0, ErrorKind::GcrdWithTNotOne,
            "t is a right factor; strip it before factoring");
    const auto h = mclm(f);
    require(h.degree() == f.degree(), ErrorKind::CriterionNotSatisfied,
            "deg h = " + std::to_string(h.degree()) + " differs from m = " + std::to_string(f.degree()));
    const auto N = reduced_norm(f);
    require(N.poly.monic() == h.poly, ErrorKind::Internal, "N(f) and h differ although deg h = m");
    return {expand_factors(factor_central(ring, h.poly, seed))};
}

Factorization<GfElem> extract(const SigmaPoly& f, const std::vector<CentralPolynomial<GfElem>>& hs,
                              const std::vector<std::size_t>& ordering, std::uint64_t budget) {
    const auto& ring = f.ring();
    const std::size_t l = hs.size();
    std::vector<std::size_t> ord = ordering;
    if (ord.empty())
        for (std::size_t i = 0; i < l; ++i) ord.push_back(i);
    {
        auto sorted = ord;
        std::sort(sorted.begin(), sorted.end());
        bool perm = sorted.size() == l;
        for (std::size_t i = 0; perm && i < l; ++i) perm = sorted[i] == i;
        require(perm, ErrorKind::InvalidArgument,
                "ordering must be a permutation of 0.." + std::to_string(l == 0 ? 0 : l - 1));
    }
    Factorization<GfElem> fac;
    fac.unit = f.lead();
    SigmaPoly cur = f.monic();
    std::vector<SigmaPoly> rev;
    for (std::size_t pos = l; pos-- > 1;) {
        const auto& h = hs[ord[pos]];
        const int dh = h.degree();
        SigmaPoly cand = gcrd(cur, lower(ring, h.poly));
        if (cand.degree() > dh) {
            auto found = search_right_factor(cand, dh, budget);
            require(found.has_value(), ErrorKind::ExtractionDegreeMismatch,
                    "no right factor of degree " + std::to_string(dh) + " inside the isotypic block");
            cand = *found;
        }
        require(cand.degree() == dh, ErrorKind::ExtractionDegreeMismatch,
                "gcrd with h(x) = " + to_string(h) + " has degree " + std::to_string(cand.degree()));
        auto [q, r] = right_divide(cur, cand);
        require(r.is_zero(), ErrorKind::Internal, "extracted factor does not divide");
        rev.push_back(cand);
        cur = q;
    }
    rev.push_back(cur);
    fac.factors.assign(rev.rbegin(), rev.rend());
    for (std::size_t i = 0; i < l; ++i) {
        const auto& fi = fac.factors[i];
        const auto& h = hs[ord[i]];
        require(fi.degree() == h.degree(), ErrorKind::ExtractionDegreeMismatch, "factor degree differs from deg h");
        require(mclm(fi).poly == h.poly, ErrorKind::Internal, "extracted factor has the wrong central multiple");
        const bool norm_ok = reduced_norm(fi).poly.monic() == h.poly;
        fac.info.push_back({norm_ok, norm_ok ? (fi.degree() == 1 ? Route::Degree1 : Route::NormIrreducible) : Route::None});
        fac.central.push_back(h);
    }
    certify(f, fac);
    return fac;
}

}  // namespace

Factorization<GfElem> rough_factorize(const SigmaPoly& f, const std::vector<std::size_t>& ordering,
                                      std::uint64_t seed, std::uint64_t budget) {
    const auto data = prepare(f, seed);
    return extract(f, data.expanded, ordering, budget);
}

std::string factorization_key(const Factorization<GfElem>& fac) {
    std::string key;
    for (const auto& f : fac.factors) {
        for (const auto& c : f.coeffs()) key += std::to_string(c.index()) + ",";
        key += ";";
    }
    return key;
}

FactorizationSet all_factorizations(const SigmaPoly& f, std::uint64_t seed, std::uint64_t budget) {
    FactorizationSet out;
    const auto data = prepare(f, seed);
    out.central_factors = data.expanded;
    const std::size_t l = data.expanded.size();
    for (std::size_t i = 1; i < l; ++i)
        if (data.expanded[i].poly == data.expanded[i - 1].poly) out.repeated_central_factors = true;
    std::vector<std::size_t> ord(l);
    for (std::size_t i = 0; i < l; ++i) ord[i] = i;
    if (out.repeated_central_factors) {
        out.list.push_back(extract(f, data.expanded, ord, budget));
        return out;
    }
    do {
        out.list.push_back(extract(f, data.expanded, ord, budget));
    } while (std::next_permutation(ord.begin(), ord.end()));
    std::sort(out.list.begin(), out.list.end(),
              [](const auto& a, const auto& b) { return factorization_key(a) < factorization_key(b); });
    for (std::size_t i = 1; i < out.list.size(); ++i)
        require(factorization_key(out.list[i]) != factorization_key(out.list[i - 1]), ErrorKind::Internal,
                "two orderings produced the same factorization");
    return out;
}

}  // namespace orenorm
