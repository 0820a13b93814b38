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

#ifndef FORMFORGE_ERRORS_HPP
#define FORMFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace formforge {

class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define FORMFORGE_ERROR(Name)                                                   \
    class Name : public Error {                                                 \
       public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}          \
    }

FORMFORGE_ERROR(NotSquarefree);
FORMFORGE_ERROR(NotDivisible);
FORMFORGE_ERROR(DimensionMismatch);
FORMFORGE_ERROR(DegreeMismatch);
FORMFORGE_ERROR(FieldMismatch);
FORMFORGE_ERROR(ZeroFunctional);
FORMFORGE_ERROR(Singular);
FORMFORGE_ERROR(DegenerateInput);
FORMFORGE_ERROR(DegreeTooSmall);
FORMFORGE_ERROR(NonCommutativeCenter);
FORMFORGE_ERROR(AdjointIdentityFailure);
FORMFORGE_ERROR(DegeneratePairing);
FORMFORGE_ERROR(MissingWitness);
FORMFORGE_ERROR(SingularWitness);
FORMFORGE_ERROR(WitnessInvalid);
FORMFORGE_ERROR(UnitMismatch);
FORMFORGE_ERROR(InvalidArgument);
FORMFORGE_ERROR(ParseError);

#undef FORMFORGE_ERROR

// Inversion hit a zero divisor of an etale algebra. `factor_hint` holds the
// coefficients (low to high) of a nontrivial factor of the defining polynomial
// when one is known.
class ZeroDivisor : public Error {
   public:
    ZeroDivisor(const std::string& what, std::vector<std::string> factor_hint = {})
        : Error("ZeroDivisor", what), factor_hint_(std::move(factor_hint)) {}
    const std::vector<std::string>& factor_hint() const noexcept { return factor_hint_; }

   private:
    std::vector<std::string> factor_hint_;
};

}  // namespace formforge

#endif
