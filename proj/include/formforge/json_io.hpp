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

#ifndef FORMFORGE_JSON_IO_HPP
#define FORMFORGE_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "formforge/constructions.hpp"

namespace formforge {

using json = nlohmann::json;

// Rationals are "p/q" strings ("p" when q = 1); integers are accepted on
// input. Field elements are arrays of power-basis coordinates. Index tuples
// and structure-table indices are 1-based.
json to_json(const Rational& q);
json to_json(const Field& f);
json to_json(const Scalar& s);
json to_json(const Polynomial& p);
json to_json(const RationalFunction& f);
json to_json(const HomogeneousForm& phi);
json to_json(const Matrix<Scalar>& m);
json to_json(const Matrix<RationalFunction>& m);
json to_json(const SymmetricTensor& t);
json to_json(const ScaledWitness& w);
json to_json(const BilinearMap& z);
json to_json(const AlgebraPresentation& A);
json to_json(const ConstructedForm& f);
json to_json(const VerificationReport& r, bool timing = false);
json to_json(const Decomposition& d);
json to_json(const ObstructionReport& r);

// Parsers throw ParseError naming the JSON pointer of the offending value.
Rational rational_from_json(const json& j, const std::string& where = "");
Field field_from_json(const json& j, const std::string& where = "");
Scalar scalar_from_json(const json& j, const Field& field, const std::string& where = "");
Polynomial polynomial_from_json(const json& j, const Field& field, const std::string& where = "");
RationalFunction rational_function_from_json(const json& j, const Field& field, const std::string& where = "");
HomogeneousForm form_from_json(const json& j, const std::string& where = "");
Matrix<Scalar> scalar_matrix_from_json(const json& j, const Field& field, const std::string& where = "");
Matrix<RationalFunction> rf_matrix_from_json(const json& j, const Field& field, const std::string& where = "");
ScaledWitness witness_from_json(const json& j, const Field& field, const std::string& where = "");
BilinearMap bilinear_from_json(const json& j, const Field& field, const std::string& where = "");
AlgebraPresentation algebra_from_json(const json& j, const std::string& where = "");
// Similarity families do not survive serialization.
ConstructedForm constructed_from_json(const json& j, const std::string& where = "");

}  // namespace formforge

#endif
