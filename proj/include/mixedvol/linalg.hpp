#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mixedvol/rational.hpp"

// Small dense exact linear algebra over Rational. Sizes here are tiny
// (ambient dimensions and interpolation systems), so plain Gaussian
// elimination with exact pivoting is enough.

namespace mixedvol {

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

// Row-reduces in place, returns pivot column per pivot row.
inline std::vector<int> row_echelon(RationalMatrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (m[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace detail

inline int matrix_rank(RationalMatrix m) {
    return static_cast<int>(detail::row_echelon(m).size());
}

inline Rational determinant(RationalMatrix m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / inv;
            for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

/// Solves A x = b for square invertible A; nullopt when A is singular or
/// the system is inconsistent/underdetermined.
inline std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                         std::vector<Rational> b) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return std::vector<Rational>{};
    const int cols = static_cast<int>(a[0].size());
    for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
    const std::vector<int> pivots = detail::row_echelon(a);
    // A pivot in the augmented column means 0 = 1 somewhere.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    const int rank = static_cast<int>(pivots.size());
    if (rank < cols) return std::nullopt;
    for (int r = rank; r < rows; ++r) {
        if (a[r][cols] != 0) return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (int r = 0; r < rank; ++r) x[pivots[r]] = a[r][cols];
    return x;
}

/// One nonzero vector in the nullspace of the given rows; requires the
/// nullspace to be exactly one-dimensional.
inline std::vector<Rational> nullspace_vector(RationalMatrix m) {
    if (m.empty()) throw std::invalid_argument("nullspace of empty matrix");
    const int cols = static_cast<int>(m[0].size());
    const std::vector<int> pivots = detail::row_echelon(m);
    const int rank = static_cast<int>(pivots.size());
    if (rank != cols - 1) {
        throw std::invalid_argument("nullspace is not one-dimensional");
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot[c]) { free_col = c; break; }
    }
    std::vector<Rational> x(cols);
    x[free_col] = 1;
    for (int r = 0; r < rank; ++r) x[pivots[r]] = -m[r][free_col];
    return x;
}

}  // namespace mixedvol
