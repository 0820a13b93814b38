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

#ifndef FORMFORGE_FACTOR_HPP
#define FORMFORGE_FACTOR_HPP

#include <utility>
#include <vector>

#include "formforge/field.hpp"
#include "formforge/univariate.hpp"

namespace formforge {

using QPoly = Univariate<Rational>;
using KPoly = Univariate<Scalar>;

// Monic irreducible factors of a squarefree polynomial over Q (Zassenhaus
// with a single large prime, no Hensel lifting).
std::vector<QPoly> factor_squarefree_rational(const QPoly& f);

// Monic irreducible factors of a squarefree polynomial over K (Trager's norm
// method on top of the rational factorizer). K == nullptr means Q.
std::vector<KPoly> factor_squarefree(const KPoly& f, const Field& K);

// Irreducible factors with multiplicities, sorted by degree then coefficients.
std::vector<std::pair<KPoly, unsigned>> factor(const KPoly& f, const Field& K);

QPoly to_qpoly(const KPoly& f);
KPoly to_kpoly(const QPoly& f, const Field& K);

}  // namespace formforge

#endif
