#ifndef CYV_LINALG_HPP
#define CYV_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cyv/field.hpp"

namespace cyv {

template <Field F>
using Matrix = std::vector<std::vector<typename F::Element>>;

template <Field F>
Matrix<F> zero_matrix(const F& f, std::size_t rows, std::size_t cols) {
    return Matrix<F>(rows, std::vector<typename F::Element>(cols, f.zero()));
}

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
template <Field F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        auto inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            auto factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <Field F>
std::size_t rank(const F& f, Matrix<F> m) {
    return rref(f, m).size();
}

template <Field F>
typename F::Element determinant(const F& f, Matrix<F> m) {
    const std::size_t n = m.size();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && f.is_zero(m[p][c])) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        auto inv = f.inv(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (f.is_zero(m[i][c])) continue;
            auto factor = f.mul(m[i][c], inv);
            for (std::size_t j = c; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
        }
    }
    return det;
}

/// Basis of { x : m x = 0 }, one vector per free column, in column order.
template <Field F>
std::vector<std::vector<typename F::Element>> nullspace(const F& f, Matrix<F> m, std::size_t cols) {
    std::vector<std::size_t> pivots = m.empty() ? std::vector<std::size_t>{} : rref(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Element>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Element> v(cols, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = b when the solution exists and is unique.
template <Field F>
std::optional<std::vector<typename F::Element>> solve_unique(const F& f, const Matrix<F>& m,
                                                             const std::vector<typename F::Element>& b) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Matrix<F> aug = m;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(f, aug);
    if (pivots.size() != cols) return std::nullopt;
    for (auto c : pivots)
        if (c == cols) return std::nullopt;
    for (std::size_t i = cols; i < rows; ++i)
        if (!f.is_zero(aug[i][cols])) return std::nullopt;
    std::vector<typename F::Element> x(cols, f.zero());
    for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

}  // namespace cyv

#endif  // CYV_LINALG_HPP
