#ifndef ARBOREAL_LINALG_HPP
#define ARBOREAL_LINALG_HPP

// Small dense exact linear algebra over the rationals.

#include "arboreal/poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace arboreal {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant by Gaussian elimination with exact pivoting.
inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Replaces column `col` of `m` by `v`.
inline RationalMatrix with_column(RationalMatrix m, std::size_t col, const std::vector<Rational>& v) {
    for (std::size_t r = 0; r < m.size(); ++r) m[r].at(col) = v.at(r);
    return m;
}

/// Solves m x = b by Cramer's rule; m must be nonsingular.
inline std::vector<Rational> cramer_solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    const Rational det = determinant(m);
    if (det == 0) throw std::domain_error("cramer_solve: singular matrix");
    std::vector<Rational> x(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) x[i] = determinant(with_column(m, i, b)) / det;
    return x;
}

}  // namespace arboreal

#endif
