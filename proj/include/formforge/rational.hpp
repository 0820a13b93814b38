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

#ifndef FORMFORGE_RATIONAL_HPP
#define FORMFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace formforge {

// Exact rationals. Arithmetic results are canonical; the two-argument
// constructor is not, so build fractions in lowest terms or canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Exact d-th root of q in Q, if one exists.
std::optional<Rational> rational_root(const Rational& q, unsigned d);

Integer factorial(unsigned n);
// d! / (e_1! ... e_n!) for d = sum of e_i.
template <class Exp>
Integer multinomial(std::span<const Exp> exponents) {
    unsigned total = 0;
    for (auto e : exponents) total += static_cast<unsigned>(e);
    Integer r = factorial(total);
    for (auto e : exponents) r /= factorial(static_cast<unsigned>(e));
    return r;
}

}  // namespace formforge

#endif
