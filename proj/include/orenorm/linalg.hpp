#pragma once

// Exact linear algebra over commutative fields and over polynomial rings K[x].

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "orenorm/errors.hpp"
#include "orenorm/poly.hpp"

namespace orenorm {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row-echelon basis that remembers how each stored row was built from the vectors
/// passed to add(), so that dependencies can be reported in terms of the originals.
template <class S>
class IncrementalBasis {
   public:
    explicit IncrementalBasis(S zero) : zero_(std::move(zero)) {}

    std::size_t added() const noexcept { return added_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Coefficients c with v = Σ c_i · original_i, or nullopt if v is independent.
    std::optional<std::vector<S>> express(const std::vector<S>& v) const {
        auto [residual, combo] = reduce(v);
        for (const auto& e : residual)
            if (!is_zero(e)) return std::nullopt;
        return combo;
    }

    /// Appends v as original number added(); returns false (and stores nothing new
    /// in the echelon form) if v depends on earlier vectors.
    bool add(const std::vector<S>& v) {
        auto [residual, combo] = reduce(v);
        const std::size_t idx = added_++;
        for (auto& r : rows_) r.combo.resize(added_, zero_);
        std::size_t pivot = residual.size();
        for (std::size_t i = 0; i < residual.size(); ++i)
            if (!is_zero(residual[i])) {
                pivot = i;
                break;
            }
        if (pivot == residual.size()) return false;
        // residual = v - Σ combo·originals; normalize so the pivot entry is 1.
        for (auto& c : combo) c = -c;
        combo.resize(added_, zero_);
        combo[idx] = one_of(zero_);
        const S inv = inverse(residual[pivot]);
        for (auto& e : residual) e = inv * e;
        for (auto& c : combo) c = inv * c;
        rows_.push_back({std::move(residual), std::move(combo), pivot});
        return true;
    }

   private:
    struct Row {
        std::vector<S> vec;
        std::vector<S> combo;
        std::size_t pivot;
    };
    S zero_;
    std::size_t added_ = 0;
    std::vector<Row> rows_;

    std::pair<std::vector<S>, std::vector<S>> reduce(std::vector<S> v) const {
        std::vector<S> combo(added_, zero_);
        for (const auto& r : rows_) {
            if (r.pivot >= v.size()) continue;
            const S c = v[r.pivot];
            if (is_zero(c)) continue;
            for (std::size_t i = 0; i < v.size() && i < r.vec.size(); ++i) v[i] = v[i] - c * r.vec[i];
            for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] = combo[i] + c * r.combo[i];
        }
        return {std::move(v), std::move(combo)};
    }
};

/// Determinant over a commutative field by Gaussian elimination.
template <class T>
T det_field(Matrix<T> m, const T& zero) {
    const std::size_t n = m.size();
    T det = one_of(zero);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) ++piv;
        if (piv == n) return zero;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const T inv = inverse(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) continue;
            const T f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

/// Solves the row system x·A = b over a commutative field; nullopt if A is singular.
template <class T>
std::optional<std::vector<T>> solve_row_system(const Matrix<T>& a, const std::vector<T>& b, const T& zero) {
    const std::size_t n = a.size();
    // Transpose into the column system Aᵀ xᵀ = bᵀ with an augmented column.
    Matrix<T> m(n, std::vector<T>(n + 1, zero));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[j][i] = a[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) m[j][n] = b[j];
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        const T inv = inverse(m[c][c]);
        for (std::size_t k = c; k <= n; ++k) m[c][k] = inv * m[c][k];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(m[r][c])) continue;
            const T f = m[r][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    std::vector<T> x(n, zero);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

/// Fraction-free (Bareiss) determinant over K[x]; every division is exact.
template <class T>
Poly<T> det_bareiss(Matrix<Poly<T>> m, const T& zero) {
    const std::size_t n = m.size();
    if (n == 0) return Poly<T>::constant(one_of(zero));
    Poly<T> prev = Poly<T>::constant(one_of(zero));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly<T>(zero);
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Poly<T>(zero);
        }
        prev = m[k][k];
    }
    Poly<T> d = m[n - 1][n - 1];
    return negate ? -d : d;
}

/// Determinant over K[x] by evaluation at distinct points of K and Lagrange
/// interpolation. `point(i)` yields the i-th evaluation point or nullopt when K has
/// run out of points; then the whole computation returns nullopt.
template <class T>
std::optional<Poly<T>> det_interpolated(const Matrix<Poly<T>>& m, const T& zero,
                                        const std::function<std::optional<T>(std::size_t)>& point) {
    const std::size_t n = m.size();
    std::size_t bound = 0;
    for (const auto& row : m) {
        int best = 0;
        for (const auto& e : row) best = std::max(best, e.degree());
        bound += static_cast<std::size_t>(best);
    }
    std::vector<T> xs, ys;
    for (std::size_t i = 0; i <= bound; ++i) {
        auto pt = point(i);
        if (!pt) return std::nullopt;
        Matrix<T> ev(n, std::vector<T>(n, zero));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) ev[r][c] = m[r][c].eval(*pt);
        xs.push_back(*pt);
        ys.push_back(det_field(std::move(ev), zero));
    }
    Poly<T> result(zero);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<T> basis = Poly<T>::constant(one_of(zero));
        T denom = one_of(zero);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly<T>(zero, {-xs[j], one_of(zero)});
            denom = denom * (xs[i] - xs[j]);
        }
        result += (ys[i] * inverse(denom)) * basis;
    }
    return result;
}

template <class T>
Matrix<Poly<T>> mat_mul(const Matrix<Poly<T>>& a, const Matrix<Poly<T>>& b, const T& zero) {
    const std::size_t n = a.size(), k = b.size(), w = b.empty() ? 0 : b[0].size();
    Matrix<Poly<T>> out(n, std::vector<Poly<T>>(w, Poly<T>(zero)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

}  // namespace orenorm
