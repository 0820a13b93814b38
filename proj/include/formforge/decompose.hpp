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

#ifndef FORMFORGE_DECOMPOSE_HPP
#define FORMFORGE_DECOMPOSE_HPP

#include <vector>

#include "formforge/form.hpp"

namespace formforge {

// Endomorphisms f with theta(f x1, x2, ...) = theta(x1, f x2, ...).
struct CenterAlgebra {
    Field field;
    std::size_t n = 0;
    std::vector<Matrix<Scalar>> basis;
    std::size_t dim() const { return basis.size(); }
};

// Throws DegreeTooSmall (d < 3), DegenerateInput, NonCommutativeCenter.
CenterAlgebra center_algebra(const SymmetricTensor& theta);
// Dimension of the center modulo its nilradical (rank of the trace form).
std::size_t semisimple_dimension(const CenterAlgebra& Z);

struct Component {
    Matrix<Scalar> basis;  // n x r, columns span the component
    HomogeneousForm form;  // phi restricted to the columns
};

struct Decomposition {
    std::vector<Component> components;
    std::vector<Matrix<Scalar>> idempotents;  // aligned with components
    std::size_t center_dim = 0;
    std::size_t semisimple_dim = 0;
    // Columns of all component bases side by side.
    Matrix<Scalar> change_of_basis() const;
};

// Components sorted by dimension, then body.
Decomposition krull_schmidt_decompose(const HomogeneousForm& phi);
bool is_absolutely_indecomposable(const HomogeneousForm& phi);
// phi(P y) equals the orthogonal sum of the component forms.
bool reconstruction_holds(const HomogeneousForm& phi, const Decomposition& dec);

}  // namespace formforge

#endif
