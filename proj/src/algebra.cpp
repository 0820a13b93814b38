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

#include "formforge/algebra.hpp"

#include <bit>
#include <functional>

#include "formforge/errors.hpp"

namespace formforge {

namespace {

using Vec = std::vector<Scalar>;

void set_table(AlgebraPresentation& A, const std::function<Vec(const Vec&, const Vec&)>& mul) {
    A.table.clear();
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec p = mul(A.basis(i), A.basis(j));
            for (std::size_t k = 0; k < A.dim; ++k)
                if (!p[k].is_zero())
                    A.table.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                                       static_cast<std::uint16_t>(k), p[k]});
        }
}

Vec cd_conj(const Vec& x) {
    Vec r = x;
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

Vec cd_mul(const Vec& x, const Vec& y, const std::vector<Scalar>& params, std::size_t level) {
    if (level == 0) return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    const Scalar& g = params[level - 1];
    Vec first = cd_mul(a, c, params, level - 1);
    Vec t = cd_mul(cd_conj(d), b, params, level - 1);
    for (std::size_t i = 0; i < h; ++i) first[i] += g * t[i];
    Vec second = cd_mul(d, a, params, level - 1);
    Vec u = cd_mul(b, cd_conj(c), params, level - 1);
    for (std::size_t i = 0; i < h; ++i) second[i] += u[i];
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

// Split octonion helpers on coordinate vectors over any ring.
struct Octonions {
    AlgebraPresentation alg = cayley_dickson({Scalar(1), Scalar(1), Scalar(1)});

    template <class R>
    std::vector<R> mul(const std::vector<R>& x, const std::vector<R>& y) const {
        return alg.multiply(x, y);
    }
    template <class R>
    std::vector<R> conj(std::vector<R> x) const {
        for (std::size_t i = 1; i < 8; ++i) x[i] = -x[i];
        return x;
    }
    template <class R>
    R norm(const std::vector<R>& x) const {
        R acc{};
        for (std::size_t i = 0; i < 8; ++i) {
            if (std::popcount(i) % 2) acc -= x[i] * x[i];
            else acc += x[i] * x[i];
        }
        return acc;
    }
    template <class R>
    R trace(const std::vector<R>& x) const {
        return x[0] * Scalar(2);
    }
};

const Octonions& octonions() {
    static const Octonions o;
    return o;
}

template <class R>
std::vector<R> slice(const std::vector<R>& x, std::size_t from) {
    return std::vector<R>(x.begin() + static_cast<std::ptrdiff_t>(from),
                          x.begin() + static_cast<std::ptrdiff_t>(from + 8));
}

template <class R>
std::vector<R> scalar_oct(const R& a) {
    std::vector<R> v(8);
    v[0] = a;
    return v;
}

template <class R>
std::vector<R> albert_jordan(const std::vector<R>& X, const std::vector<R>& Y) {
    const auto& O = octonions();
    auto herm = [&](const std::vector<R>& Z) {
        auto x1 = slice(Z, 3), x2 = slice(Z, 11), x3 = slice(Z, 19);
        std::vector<std::vector<std::vector<R>>> H(3, std::vector<std::vector<R>>(3));
        H[0][0] = scalar_oct(Z[0]);
        H[1][1] = scalar_oct(Z[1]);
        H[2][2] = scalar_oct(Z[2]);
        H[0][1] = x3;
        H[1][0] = O.conj(x3);
        H[1][2] = x1;
        H[2][1] = O.conj(x1);
        H[2][0] = x2;
        H[0][2] = O.conj(x2);
        return H;
    };
    auto HX = herm(X), HY = herm(Y);
    auto prod = [&](const auto& A, const auto& B, std::size_t i, std::size_t j) {
        std::vector<R> acc(8);
        for (std::size_t k = 0; k < 3; ++k) {
            auto p = O.mul(A[i][k], B[k][j]);
            for (std::size_t c = 0; c < 8; ++c) acc[c] += p[c];
        }
        return acc;
    };
    auto sym = [&](std::size_t i, std::size_t j) {
        auto a = prod(HX, HY, i, j), b = prod(HY, HX, i, j);
        for (std::size_t c = 0; c < 8; ++c) a[c] = (a[c] + b[c]) * Scalar(Rational(1, 2));
        return a;
    };
    std::vector<R> out(27);
    for (std::size_t i = 0; i < 3; ++i) out[i] = sym(i, i)[0];
    auto x1 = sym(1, 2), x2 = sym(2, 0), x3 = sym(0, 1);
    for (std::size_t c = 0; c < 8; ++c) {
        out[3 + c] = x1[c];
        out[11 + c] = x2[c];
        out[19 + c] = x3[c];
    }
    return out;
}

}  // namespace

std::vector<Polynomial> AlgebraPresentation::generic(std::size_t nvars, std::size_t offset) const {
    std::vector<Polynomial> x;
    for (std::size_t i = 0; i < dim; ++i) x.push_back(Polynomial::variable(nvars, offset + i));
    return x;
}

std::vector<Scalar> AlgebraPresentation::basis(std::size_t i) const {
    std::vector<Scalar> e(dim);
    e.at(i) = Scalar(1);
    return e;
}

Matrix<Polynomial> AlgebraPresentation::left_multiplication() const {
    auto X = generic(dim);
    Matrix<Polynomial> m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Polynomial> e(dim, Polynomial(dim));
        e[j] = Polynomial::constant(dim, 1);
        auto col = multiply(X, e);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i] + Polynomial(dim);
    }
    return m;
}

Matrix<Polynomial> AlgebraPresentation::u_operator() const {
    auto X = generic(dim);
    Matrix<Polynomial> m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Polynomial> e(dim, Polynomial(dim));
        e[j] = Polynomial::constant(dim, 1);
        auto col = triple(X, e);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i] + Polynomial(dim);
    }
    return m;
}

Matrix<Scalar> AlgebraPresentation::trace_pairing() const {
    if (!trace) throw InvalidArgument(name + " has no trace functional");
    Matrix<Scalar> T(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto p = multiply(basis(i), basis(j));
            Scalar acc(0);
            for (std::size_t k = 0; k < dim; ++k) acc += (*trace)[k] * p[k];
            T(i, j) = acc;
        }
    return T;
}

AlgebraPresentation matrix_algebra(std::size_t d, const Field& field) {
    if (d == 0) throw InvalidArgument("matrix size must be positive");
    AlgebraPresentation A;
    A.name = "M" + std::to_string(d);
    A.field = field;
    A.dim = d * d;
    A.special = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l)
                A.table.push_back({static_cast<std::uint16_t>(i * d + j), static_cast<std::uint16_t>(j * d + l),
                                   static_cast<std::uint16_t>(i * d + l), Scalar(1)});
    A.unit.assign(A.dim, Scalar(0));
    A.trace = std::vector<Scalar>(A.dim, Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
        A.unit[i * d + i] = Scalar(1);
        (*A.trace)[i * d + i] = Scalar(1);
    }
    Matrix<Polynomial> X(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) X(i, j) = Polynomial::variable(A.dim, i * d + j);
    A.norm = HomogeneousForm(field, static_cast<unsigned>(d), A.dim, determinant_expand(X));
    return A;
}

AlgebraPresentation split_etale_algebra(std::size_t m, const Field& field) {
    if (m == 0) throw InvalidArgument("dimension must be positive");
    AlgebraPresentation A;
    A.name = "k^" + std::to_string(m);
    A.field = field;
    A.dim = m;
    A.special = true;
    for (std::size_t i = 0; i < m; ++i)
        A.table.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(i),
                           static_cast<std::uint16_t>(i), Scalar(1)});
    A.unit.assign(m, Scalar(1));
    A.trace = std::vector<Scalar>(m, Scalar(1));
    A.involution = Matrix<Scalar>::identity(m, Scalar(1));
    Polynomial p = Polynomial::constant(m, 1);
    for (std::size_t i = 0; i < m; ++i) p = p * Polynomial::variable(m, i);
    A.norm = HomogeneousForm(field, static_cast<unsigned>(m), m, p);
    return A;
}

AlgebraPresentation cayley_dickson(const std::vector<Scalar>& params, const Field& field) {
    if (params.size() > 3) throw InvalidArgument("doubling beyond the octonions is not a composition algebra");
    for (const auto& g : params)
        if (g.is_zero()) throw InvalidArgument("doubling parameters must be nonzero");
    AlgebraPresentation A;
    const std::size_t r = params.size();
    A.name = r == 0 ? "k" : r == 1 ? "binary" : r == 2 ? "quaternion" : "octonion";
    A.field = field;
    A.dim = std::size_t{1} << r;
    A.special = true;
    set_table(A, [&](const Vec& x, const Vec& y) { return cd_mul(x, y, params, r); });
    A.unit = A.basis(0);
    Matrix<Scalar> inv(A.dim, A.dim);
    inv(0, 0) = Scalar(1);
    for (std::size_t i = 1; i < A.dim; ++i) inv(i, i) = Scalar(-1);
    A.involution = inv;
    A.trace = std::vector<Scalar>(A.dim, Scalar(0));
    (*A.trace)[0] = Scalar(2);
    Polynomial n(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) {
        Scalar w(1);
        for (std::size_t l = 0; l < r; ++l)
            if (i >> l & 1u) w *= -params[l];
        Monomial m(A.dim, 0);
        m[i] = 2;
        n += Polynomial::monomial(A.dim, std::move(m), w);
    }
    A.norm = HomogeneousForm(field, 2, A.dim, n);
    return A;
}

AlgebraPresentation split_albert_algebra() {
    AlgebraPresentation A;
    A.name = "albert";
    A.dim = 27;
    A.special = false;
    set_table(A, [](const Vec& x, const Vec& y) { return albert_jordan(x, y); });
    A.unit.assign(27, Scalar(0));
    A.trace = std::vector<Scalar>(27, Scalar(0));
    for (std::size_t i = 0; i < 3; ++i) {
        A.unit[i] = Scalar(1);
        (*A.trace)[i] = Scalar(1);
    }
    const auto& O = octonions();
    auto X = A.generic(27);
    auto x1 = slice(X, 3), x2 = slice(X, 11), x3 = slice(X, 19);
    Polynomial N = X[0] * X[1] * X[2] - X[0] * O.norm(x1) - X[1] * O.norm(x2) - X[2] * O.norm(x3) +
                   O.trace(O.mul(O.mul(x1, x2), x3));
    A.norm = HomogeneousForm(nullptr, 3, 27, N);
    return A;
}

std::vector<Polynomial> albert_sharp() {
    const auto& O = octonions();
    std::vector<Polynomial> X;
    for (std::size_t i = 0; i < 27; ++i) X.push_back(Polynomial::variable(27, i));
    auto x1 = slice(X, 3), x2 = slice(X, 11), x3 = slice(X, 19);
    std::vector<Polynomial> out(27);
    out[0] = X[1] * X[2] - O.norm(x1);
    out[1] = X[2] * X[0] - O.norm(x2);
    out[2] = X[0] * X[1] - O.norm(x3);
    auto y1 = O.conj(O.mul(x2, x3)), y2 = O.conj(O.mul(x3, x1)), y3 = O.conj(O.mul(x1, x2));
    for (std::size_t c = 0; c < 8; ++c) {
        out[3 + c] = y1[c] - X[0] * x1[c];
        out[11 + c] = y2[c] - X[1] * x2[c];
        out[19 + c] = y3[c] - X[2] * x3[c];
    }
    return out;
}

}  // namespace formforge
