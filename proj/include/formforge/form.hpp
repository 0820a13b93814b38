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

#ifndef FORMFORGE_FORM_HPP
#define FORMFORGE_FORM_HPP

#include <functional>
#include <map>
#include <vector>

#include "formforge/etale.hpp"
#include "formforge/polynomial.hpp"

namespace formforge {

// A degree-d form on k^n, stored as its homogeneous polynomial.
struct HomogeneousForm {
    Field field;
    unsigned degree = 0;
    std::size_t dim = 0;
    Polynomial body;

    HomogeneousForm() = default;
    // Checks arity, homogeneity and that the coefficients live in `field`.
    HomogeneousForm(Field field, unsigned degree, std::size_t dim, Polynomial body);

    Scalar operator()(const std::vector<Scalar>& v) const { return body.evaluate(v); }
    friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
        return same_field(a.field, b.field) && a.degree == b.degree && a.dim == b.dim &&
               a.body == b.body;
    }
};

HomogeneousForm diagonal_form(const Field& field, unsigned degree, const std::vector<Scalar>& a);
HomogeneousForm scaled(const HomogeneousForm& phi, const Scalar& a);

// Sorted 0-based index tuple.
using Index = std::vector<std::uint16_t>;

// Calls f on every non-decreasing tuple of length d over {0..n-1}, in
// lexicographic order.
void for_each_sorted_tuple(std::size_t n, unsigned d, const std::function<void(const Index&)>& f);

// Symmetric d-linear form; only sorted index tuples with nonzero values are stored.
struct SymmetricTensor {
    Field field;
    unsigned degree = 0;
    std::size_t dim = 0;
    std::map<Index, Scalar> entries;

    Scalar at(Index idx) const;
    void set(Index idx, const Scalar& v);
    // theta(v_1, ..., v_d)
    Scalar evaluate(const std::vector<std::vector<Scalar>>& vs) const;
    friend bool operator==(const SymmetricTensor& a, const SymmetricTensor& b) {
        return a.degree == b.degree && a.dim == b.dim && a.entries == b.entries;
    }
};

// Symmetric tensor with values in an etale algebra (coordinates per entry).
struct AlgebraTensor {
    EtaleAlgebra algebra;
    unsigned degree = 0;
    std::size_t dim = 0;
    std::map<Index, std::vector<Scalar>> entries;

    std::vector<Scalar> at(Index idx) const;
    void set(Index idx, std::vector<Scalar> v);
};

// Inclusion-exclusion over subsets of the arguments.
SymmetricTensor polarize_alternating(const HomogeneousForm& phi);
// Coefficient of x^e divided by the multinomial coefficient of e.
SymmetricTensor polarize_multinomial(const HomogeneousForm& phi);
SymmetricTensor polarize(const HomogeneousForm& phi);
HomogeneousForm depolarize(const SymmetricTensor& theta);

// Basis of the radical, empty iff nondegenerate.
std::vector<std::vector<Scalar>> radical(const SymmetricTensor& theta);
std::vector<std::vector<Scalar>> radical(const HomogeneousForm& phi);
bool is_nondegenerate(const HomogeneousForm& phi);

HomogeneousForm orthogonal_sum(const HomogeneousForm& a, const HomogeneousForm& b);
// Product index of (a, b) is a * dim(b) + b.
SymmetricTensor tensor_product(const SymmetricTensor& a, const SymmetricTensor& b);
AlgebraTensor tensor_product(const AlgebraTensor& a, const AlgebraTensor& b);
HomogeneousForm tensor_product(const HomogeneousForm& a, const HomogeneousForm& b);

AlgebraTensor extend_scalars(const SymmetricTensor& theta, const EtaleAlgebra& A);
AlgebraTensor extend_scalars(const HomogeneousForm& phi, const EtaleAlgebra& A);
// s_*(Gamma) on dimension dim(Gamma) * dim(A); basis vector a_i e_j has
// index j * dim(A) + i. Throws ZeroFunctional.
SymmetricTensor transfer(const EtaleAlgebra& A, const std::vector<Scalar>& s, const AlgebraTensor& gamma);

// v -> phi(P v) for an n x r matrix P.
HomogeneousForm pullback(const HomogeneousForm& phi, const Matrix<Scalar>& P);
// phi o f for invertible f; throws Singular.
HomogeneousForm apply_change_of_basis(const HomogeneousForm& phi, const Matrix<Scalar>& f);

}  // namespace formforge

#endif
