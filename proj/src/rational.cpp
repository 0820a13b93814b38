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

#include "formforge/rational.hpp"

#include <cctype>

#include "formforge/errors.hpp"

namespace formforge {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_root(const Rational& q, unsigned d) {
    if (d == 0) return std::nullopt;
    if (d == 1) return q;
    if (q == 0) return Rational(0);
    bool neg = q < 0;
    if (neg && d % 2 == 0) return std::nullopt;
    Integer num = abs(q.get_num()), den = q.get_den();
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return std::nullopt;
    Rational r(neg ? Integer(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace formforge
