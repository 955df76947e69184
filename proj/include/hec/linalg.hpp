// Small exact linear algebra helpers: rank and kernel over the rationals.

#pragma once

#include <vector>

#include "hec/rational.hpp"

namespace hec {

using QMat = std::vector<QVec>;

inline int rank_q(QMat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && size_t(r) < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int rank_i(const std::vector<IVec>& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) q[i] = to_rational(m[i]);
    return rank_q(std::move(q));
}

// Basis of {x : m x = 0}, as coprime-integer vectors.
inline std::vector<IVec> kernel_q(QMat m, size_t cols) {
    size_t rows = m.size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat d = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(int(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<IVec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVec x(cols, Rat(0));
        x[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m[i][fc];
        basis.push_back(to_coprime_integers(x));
    }
    return basis;
}

}  // namespace hec
