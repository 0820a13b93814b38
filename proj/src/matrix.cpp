/*
   Copyright 2026 The formforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "formforge/matrix.hpp"

namespace formforge {

std::vector<std::size_t> rref(Matrix<Scalar>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix<Scalar> m) { return rref(m).size(); }

Scalar determinant(Matrix<Scalar> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix<Scalar>& m) {
    Matrix<Scalar> r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    Matrix<Scalar> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("matrix is not invertible");
    Matrix<Scalar> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Scalar>> solve(const Matrix<Scalar>& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
    Matrix<Scalar> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

bool IncrementalEchelon::add(std::vector<Scalar> row) {
    if (row.size() != n_) throw DimensionMismatch("echelon row length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = row[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!rows_[i][j].is_zero()) row[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < n_ && row[p].is_zero()) ++p;
    if (p == n_) return false;
    Scalar inv = row[p].inverse();
    for (auto& x : row) x *= inv;
    for (auto& r : rows_) {
        const Scalar f = r[p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!row[j].is_zero()) r[j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

std::vector<std::vector<Scalar>> IncrementalEchelon::nullspace() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n_);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace formforge
