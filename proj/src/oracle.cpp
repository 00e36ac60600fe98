#include "orenorm/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace orenorm {

namespace oracle {

namespace {

void trim(Coeffs& c) {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
}

GfElem twist(const GfElem& a, std::uint64_t sigma_power, std::size_t times) {
    const std::uint64_t D = a.field()->degree();
    return frobenius(a, (sigma_power % D) * (times % D) % D);
}

std::pair<Coeffs, Coeffs> divide(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power) {
    require(!g.empty(), ErrorKind::DivisionByZeroPolynomial, "oracle division by zero");
    Coeffs r = f;
    trim(r);
    const std::size_t dg = g.size() - 1;
    Coeffs q(r.size() > dg ? r.size() - dg : 0, g.back().field()->zero());
    while (r.size() > dg) {
        const std::size_t k = r.size() - 1 - dg;
        // subtract c·t^k·g, whose coefficients are c·σ^k(g_j)
        const GfElem c = r.back() / twist(g.back(), sigma_power, k);
        q[k] += c;
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= c * twist(g[j], sigma_power, k);
        trim(r);
    }
    trim(q);
    return {q, r};
}

}  // namespace

Coeffs multiply(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power) {
    if (f.empty() || g.empty()) return {};
    Coeffs out(f.size() + g.size() - 1, f.front().field()->zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * twist(g[j], sigma_power, i);
    trim(out);
    return out;
}

Coeffs right_remainder(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power) {
    return divide(f, g, sigma_power).second;
}

Coeffs right_quotient(const Coeffs& f, const Coeffs& g, std::uint64_t sigma_power) {
    return divide(f, g, sigma_power).first;
}

}  // namespace oracle

namespace {

struct Search {
    FieldPtr K;
    std::uint64_t sigma_power;
    OracleBudget budget;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void tick() const {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(elapsed <= budget.seconds, ErrorKind::BudgetExceeded, "oracle time limit reached");
    }

    std::uint64_t count(std::size_t d) const {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) {
            require(total <= budget.max_candidates / K->order(), ErrorKind::BudgetExceeded,
                    "oracle would enumerate more than " + std::to_string(budget.max_candidates) +
                        " candidates of degree " + std::to_string(d));
            total *= K->order();
        }
        return total;
    }

    oracle::Coeffs candidate(std::uint64_t idx, std::size_t d) const {
        oracle::Coeffs c;
        for (std::size_t i = 0; i < d; ++i, idx /= K->order()) c.push_back(K->element(idx % K->order()));
        c.push_back(K->one());
        return c;
    }

    /// Monic right divisors of degree d.
    std::vector<oracle::Coeffs> right_divisors(const oracle::Coeffs& f, std::size_t d) const {
        std::vector<oracle::Coeffs> out;
        // f is monic here, so it is its own unique monic right divisor of full degree.
        if (d + 1 == f.size()) {
            out.push_back(f);
            return out;
        }
        const std::uint64_t total = count(d);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            if ((idx & 0xfff) == 0) tick();
            auto g = candidate(idx, d);
            if (oracle::right_remainder(f, g, sigma_power).empty()) out.push_back(std::move(g));
        }
        return out;
    }

    bool irreducible(const oracle::Coeffs& f) const {
        const std::size_t m = f.size() - 1;
        for (std::size_t d = 1; d < m; ++d) {
            const std::uint64_t total = count(d);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                if ((idx & 0xfff) == 0) tick();
                if (oracle::right_remainder(f, candidate(idx, d), sigma_power).empty()) return false;
            }
        }
        return true;
    }

    /// All sequences of monic irreducibles multiplying to the monic f.
    std::vector<std::vector<oracle::Coeffs>> decompositions(const oracle::Coeffs& f) const {
        const std::size_t m = f.size() - 1;
        std::vector<std::vector<oracle::Coeffs>> out;
        if (m == 0) {
            out.emplace_back();
            return out;
        }
        for (std::size_t d = 1; d <= m; ++d) {
            for (const auto& h : right_divisors(f, d)) {
                if (!irreducible(h)) continue;
                const auto q = oracle::right_quotient(f, h, sigma_power);
                for (auto seq : decompositions(q)) {
                    seq.push_back(h);
                    out.push_back(std::move(seq));
                }
            }
        }
        return out;
    }
};

Search make_search(const SigmaPoly& f, const OracleBudget& budget) {
    const auto& R = *f.ring();
    require(R.kind == RingKind::Sigma, ErrorKind::InvalidArgument, "the oracle enumerates finite coefficient fields only");
    require(!f.is_zero(), ErrorKind::DivisionByZeroPolynomial, "oracle on the zero polynomial");
    return Search{R.zero.field(), R.sigma_power, budget};
}

}  // namespace

bool brute_irreducible(const SigmaPoly& f, const OracleBudget& budget) {
    const auto s = make_search(f, budget);
    require(f.degree() >= 1, ErrorKind::InvalidArgument, "units are neither irreducible nor reducible");
    oracle::Coeffs c = f.coeffs();
    const GfElem inv = f.lead().inv();
    for (auto& a : c) a = inv * a;
    return s.irreducible(c);
}

std::vector<Factorization<GfElem>> brute_factorizations(const SigmaPoly& f, const OracleBudget& budget) {
    const auto s = make_search(f, budget);
    require(f.degree() >= 1, ErrorKind::InvalidArgument, "units have no factorization into irreducibles");
    const auto& ring = f.ring();
    const GfElem unit = f.lead();
    oracle::Coeffs c = f.coeffs();
    const GfElem inv = unit.inv();
    for (auto& a : c) a = inv * a;
    std::vector<Factorization<GfElem>> out;
    for (const auto& seq : s.decompositions(c)) {
        Factorization<GfElem> fac;
        fac.unit = unit;
        oracle::Coeffs prod{unit};
        for (const auto& h : seq) {
            fac.factors.emplace_back(ring, h);
            fac.info.push_back({true, Route::Oracle});
            prod = oracle::multiply(prod, h, s.sigma_power);
        }
        require(prod == f.coeffs(), ErrorKind::Internal, "oracle decomposition does not multiply back to f");
        out.push_back(std::move(fac));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return factorization_key(a) < factorization_key(b); });
    return out;
}

bool check_claimed_factorization(const DeltaPoly& f, const RationalFunction& unit,
                                 const std::vector<DeltaPoly>& factors) {
    const auto& R = *f.ring();
    require(R.kind == RingKind::Delta && R.delta, ErrorKind::InvalidArgument, "expected a differential ring");
    using V = std::vector<RationalFunction>;
    auto trim = [](V& v) {
        while (!v.empty() && is_zero(v.back())) v.pop_back();
    };
    // (Σ a_i tⁱ)·b expanded with tⁱb = Σ_k C(i,k) δ^{i-k}(b) t^k.
    auto mul = [&](const V& a, const V& b) {
        V out;
        if (a.empty() || b.empty()) return out;
        out.assign(a.size() + b.size() - 1, R.zero);
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::vector<RationalFunction> dpow{b[j]};  // δ^s(b_j)
            for (std::size_t s = 1; s < a.size(); ++s) dpow.push_back(R.delta(dpow.back()));
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::uint64_t binom = 1;  // C(i, k) mod p, built incrementally over k
                const std::uint64_t p = R.zero.ff()->base->characteristic();
                for (std::size_t k = 0; k <= i; ++k) {
                    if (k > 0) binom = binom * (i - k + 1) / k;
                    if (binom % p != 0) {
                        const auto coef = RationalFunction::constant(
                            R.zero.ff(), R.zero.ff()->base->from_int(static_cast<std::int64_t>(binom % p)));
                        out[k + j] += a[i] * coef * dpow[i - k];
                    }
                }
            }
        }
        trim(out);
        return out;
    };
    V acc{unit};
    for (const auto& g : factors) acc = mul(acc, g.coeffs());
    return acc == f.coeffs();
}

}  // namespace orenorm
