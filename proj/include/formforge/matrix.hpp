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

#ifndef FORMFORGE_MATRIX_HPP
#define FORMFORGE_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "formforge/errors.hpp"
#include "formforge/field.hpp"

namespace formforge {

// Dense row-major matrix over a ring-like type R (Scalar, Polynomial,
// RationalFunction, ...). R() must be an additive zero usable with any R.
template <class R>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
        : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw DimensionMismatch("matrix entry count");
    }

    static Matrix identity(std::size_t n, const R& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<R>& entries() const { return a_; }

    std::vector<R> row(std::size_t i) const {
        return std::vector<R>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    std::vector<R> col(std::size_t j) const {
        std::vector<R> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DimensionMismatch("matrix product shapes");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const R& x = a(i, k);
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shapes");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference shapes");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    template <class S>
    Matrix scaled(const S& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    template <class V>
    std::vector<V> apply(const std::vector<V>& v) const {
        if (v.size() != c_) throw DimensionMismatch("matrix-vector shapes");
        std::vector<V> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
        using T = decltype(f(std::declval<const R&>()));
        std::vector<T> e;
        e.reserve(a_.size());
        for (const auto& x : a_) e.push_back(f(x));
        return Matrix<T>(r_, c_, std::move(e));
    }

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<R> a_;
};

// Division-free determinant by Laplace expansion over column subsets.
// Exponential in n; meant for n <= 16.
template <class R>
R determinant_expand(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (n == 0) throw InvalidArgument("empty determinant");
    if (n > 16) throw InvalidArgument("determinant expansion limited to 16 x 16");
    // memo over the set of still-unused columns; row = n - popcount
    std::unordered_map<std::uint32_t, R> memo;
    auto rec = [&](auto&& self, std::uint32_t cols) -> R {
        int left = __builtin_popcount(cols);
        std::size_t row = n - static_cast<std::size_t>(left);
        if (left == 1) return m(row, static_cast<std::size_t>(__builtin_ctz(cols)));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        R acc{};
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols >> j & 1u)) continue;
            const R& e = m(row, j);
            if (!(e == R{})) {
                R minor = self(self, cols & ~(1u << j));
                if (sign > 0) acc += e * minor;
                else acc -= e * minor;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1);
}

// Reduced row echelon form over a field, in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Scalar>& m);
std::size_t rank(Matrix<Scalar> m);
Scalar determinant(Matrix<Scalar> m);
// Basis of {x : m x = 0}, one vector per free column, canonical (from rref).
std::vector<std::vector<Scalar>> nullspace(const Matrix<Scalar>& m);
// Throws Singular.
Matrix<Scalar> inverse(const Matrix<Scalar>& m);
// Some solution of m x = b, if any.
std::optional<std::vector<Scalar>> solve(const Matrix<Scalar>& m, const std::vector<Scalar>& b);

// Row-by-row echelon basis for tall systems with few columns; rows are
// reduced on insertion so memory stays at ncols rows.
class IncrementalEchelon {
   public:
    explicit IncrementalEchelon(std::size_t ncols) : n_(ncols) {}
    // Returns true if the row increased the rank.
    bool add(std::vector<Scalar> row);
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == n_; }
    std::vector<std::vector<Scalar>> nullspace() const;

   private:
    std::size_t n_;
    std::vector<std::vector<Scalar>> rows_;  // leading entry 1 at pivots_[i]
    std::vector<std::size_t> pivots_;
};

}  // namespace formforge

#endif
