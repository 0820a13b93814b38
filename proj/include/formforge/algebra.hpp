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

#ifndef FORMFORGE_ALGEBRA_HPP
#define FORMFORGE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "formforge/form.hpp"

namespace formforge {

// A finite-dimensional unital algebra by sparse structure constants, with
// the optional extras the constructions need.
struct AlgebraPresentation {
    struct Entry {
        std::uint16_t i, j, k;
        Scalar c;
    };

    std::string name;
    Field field;
    std::size_t dim = 0;
    std::vector<Entry> table;  // e_i e_j contains c e_k
    std::vector<Scalar> unit;
    // Associative: {x y x} = (x y) x. Otherwise the product is read as a
    // Jordan product and {x y x} = 2 (x y) x - y (x x).
    bool special = false;
    std::optional<Matrix<Scalar>> involution;
    std::optional<HomogeneousForm> norm;
    std::optional<std::vector<Scalar>> trace;  // linear functional

    template <class R>
    std::vector<R> multiply(const std::vector<R>& x, const std::vector<R>& y) const {
        if (x.size() != dim || y.size() != dim) throw DimensionMismatch("algebra element length");
        std::vector<R> out(dim);
        for (const auto& e : table) {
            if (x[e.i] == R{} || y[e.j] == R{}) continue;
            out[e.k] += x[e.i] * y[e.j] * e.c;
        }
        return out;
    }

    template <class R>
    std::vector<R> triple(const std::vector<R>& x, const std::vector<R>& y) const {
        if (special) return multiply(multiply(x, y), x);
        auto a = multiply(multiply(x, y), x);
        auto b = multiply(y, multiply(x, x));
        for (std::size_t i = 0; i < dim; ++i) a[i] = a[i] * Scalar(2) - b[i];
        return a;
    }

    // Coordinates of a generic element: variables offset .. offset+dim-1 of nvars.
    std::vector<Polynomial> generic(std::size_t nvars, std::size_t offset = 0) const;
    std::vector<Scalar> basis(std::size_t i) const;
    // Matrices in dim variables X: column j is X e_j (resp. {X e_j X}).
    Matrix<Polynomial> left_multiplication() const;
    Matrix<Polynomial> u_operator() const;
    // (e_i, e_j) -> trace(e_i e_j); needs `trace`.
    Matrix<Scalar> trace_pairing() const;
};

AlgebraPresentation matrix_algebra(std::size_t d, const Field& field = nullptr);
// k^m with coordinatewise product; norm is the product of coordinates.
AlgebraPresentation split_etale_algebra(std::size_t m, const Field& field = nullptr);
// Doubling of k with parameters gamma_1, ...: (a,b)(c,d) = (ac + g conj(d) b, da + b conj(c)),
// norm n(a) - g n(b). Dimension 2^r.
AlgebraPresentation cayley_dickson(const std::vector<Scalar>& params, const Field& field = nullptr);

// Split Albert algebra: coordinates (a1, a2, a3, x1, x2, x3) with x_i in the
// split octonions, Hermitian matrix [[a1, x3, x2*], [x3*, a2, x1], [x2, x1*, a3]].
AlgebraPresentation split_albert_algebra();
// The quadratic adjoint map X -> X# of the split Albert algebra, one
// polynomial per coordinate, in 27 variables.
std::vector<Polynomial> albert_sharp();

}  // namespace formforge

#endif
