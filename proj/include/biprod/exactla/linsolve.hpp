#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "biprod/exactla/scalar.hpp"

namespace biprod {

/// Row-major exact matrix used for elimination.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> data;

    Matrix(FieldSpec field, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Scalar::zero(field)) {}

    Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/**
 * Solves A·x = b exactly by Gauss–Jordan elimination.
 *
 * Returns one solution (free variables set to zero) or nullopt when the
 * system is inconsistent.
 */
inline std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b, FieldSpec field) {
    const std::size_t m = a.rows, n = a.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(row, k));
            std::swap(b[piv], b[row]);
        }
        const Scalar inv = a(row, col).inverse();
        for (std::size_t k = col; k < n; ++k) a(row, k) *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (std::size_t k = col; k < n; ++k) {
                if (!a(row, k).is_zero()) a(r, k) -= factor * a(row, k);
            }
            b[r] -= factor * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r) {
        if (!b[r].is_zero()) return std::nullopt;
    }
    std::vector<Scalar> x(n, Scalar::zero(field));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace biprod
