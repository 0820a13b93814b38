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

#include <random>

#include "doctest.h"
#include "formforge/etale.hpp"
#include "formforge/factor.hpp"

using namespace formforge;

namespace {

QPoly qp(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(v);
}

QPoly product(const std::vector<QPoly>& fs) {
    QPoly p = QPoly::constant(1);
    for (const auto& f : fs) p *= f;
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(rational_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(rational_root(Rational(-8), 3) == Rational(-2));
    CHECK_FALSE(rational_root(Rational(-4), 2));
    CHECK_FALSE(rational_root(Rational(2), 3));
    unsigned e[] = {2, 1, 1};
    CHECK(multinomial(std::span<const unsigned>(e)) == 12);
}

TEST_CASE("number field arithmetic against hand formulas") {
    // Q(sqrt 5): (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s
    auto K = NumberField::create({-5, 0, 1});
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int t = 0; t < 50; ++t) {
        long a = u(gen), b = u(gen), c = u(gen), d = u(gen);
        Scalar x(K, {a, b}), y(K, {c, d});
        CHECK(x * y == Scalar(K, {a * c + 5 * b * d, a * d + b * c}));
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
    CHECK(K->name() == "Q[s]/(s^2 - 5)");
    CHECK_THROWS_AS(NumberField::create({0, 0, 1}), NotSquarefree);
}

TEST_CASE("scalars from different fields do not mix") {
    auto K = NumberField::create({-2, 0, 1});
    auto L = NumberField::create({-3, 0, 1});
    Scalar s = Scalar::generator(K), t = Scalar::generator(L);
    CHECK_THROWS_AS(s + t, FieldMismatch);
    CHECK((s * s) == Scalar(2));
    CHECK((s * s).is_rational());
    CHECK(Scalar(3) + s == Scalar(K, {3, 1}));
}

TEST_CASE("cube roots of unity field") {
    auto K = NumberField::create({1, 1, 1});
    Scalar w = Scalar::generator(K);
    CHECK(w.pow(3).is_one());
    CHECK_FALSE(w.is_one());
    CHECK(w * w + w + Scalar(1) == Scalar(0));
}

TEST_CASE("univariate gcd and squarefree decomposition") {
    QPoly f = qp({-1, 0, 1}) * qp({-1, 0, 1}) * qp({2, 1});  // (x^2-1)^2 (x+2)
    QPoly g = qp({-1, 1}) * qp({5, 0, 1});
    CHECK(gcd(f, g) == qp({-1, 1}));
    auto [d, s, t] = xgcd(f, g);
    CHECK(s * f + t * g == d);
    CHECK_FALSE(is_squarefree(f));
    auto parts = squarefree_decomposition(f);
    QPoly back = QPoly::constant(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k) back *= parts[i];
    CHECK(back == f.monic());
}

TEST_CASE("rational factorization of known products") {
    auto fs = factor_squarefree_rational(qp({-2, 0, 1}) * qp({-1, -1, 0, 1}) * qp({-3, 1}) * qp({5, 1}));
    CHECK(fs.size() == 4);
    CHECK(factor_squarefree_rational(qp({1, 0, 0, 0, 1})).size() == 1);  // x^4 + 1
    CHECK(factor_squarefree_rational(qp({4, 0, 0, 0, 1})).size() == 2);  // x^4 + 4
    CHECK(factor_squarefree_rational(qp({-2, 0, 0, 1})).size() == 1);
}

TEST_CASE("property: random products of irreducibles refactor") {
    // small irreducibles chosen by hand; products with distinct factors
    std::vector<QPoly> pool = {qp({1, 1}), qp({-2, 1}), qp({3, 1}),     qp({1, 0, 1}), qp({-2, 0, 1}),
                               qp({1, 1, 1}), qp({-2, 0, 0, 1}), qp({1, 0, 0, 0, 1}), qp({-1, -1, 0, 1})};
    std::mt19937_64 gen(7);
    for (int t = 0; t < 25; ++t) {
        std::vector<QPoly> pick;
        for (const auto& p : pool)
            if (gen() % 3 == 0) pick.push_back(p);
        if (pick.empty()) continue;
        auto fs = factor_squarefree_rational(product(pick));
        CHECK(fs.size() == pick.size());
        CHECK(product(fs) == product(pick).monic());
    }
}

TEST_CASE("factorization over number fields") {
    auto W = NumberField::create({1, 1, 1});
    auto fs = factor(to_kpoly(qp({-1, 0, 0, 1}), W), W);  // x^3 - 1 over Q(w)
    CHECK(fs.size() == 3);
    auto S2 = NumberField::create({-2, 0, 1});
    auto gs = factor(to_kpoly(qp({-2, 0, 0, 0, 1}), S2), S2);  // x^4 - 2 over Q(sqrt 2)
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].first.degree() == 2);
    CHECK(factor(to_kpoly(qp({-2, 0, 0, 1}), W), W).size() == 1);
    auto rep = factor(to_kpoly(qp({1, -2, 1}), nullptr), nullptr);  // (x-1)^2
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].second == 2);
}

TEST_CASE("etale norm matches conjugate formula") {
    // Q[t]/(t^2 - 5): N(a + b t) = a^2 - 5 b^2
    auto A = EtaleAlgebra::extend(nullptr, {-5, 0, 1});
    std::mt19937_64 gen(3);
    for (int i = 0; i < 30; ++i) {
        long a = static_cast<long>(gen() % 19) - 9, b = static_cast<long>(gen() % 19) - 9;
        CHECK(A.norm({a, b}) == Scalar(a * a - 5 * b * b));
        CHECK(A.trace({a, b}) == Scalar(2 * a));
    }
    CHECK(A.trace_functional() == std::vector<Scalar>{2, 0});
}

TEST_CASE("etale algebra zero divisors report a factor") {
    auto A = EtaleAlgebra::extend(nullptr, {-1, 0, 1});  // Q x Q
    CHECK_THROWS_AS(A.inverse({1, 1}), ZeroDivisor);
    try {
        A.inverse({1, 1});
    } catch (const ZeroDivisor& e) {
        CHECK_FALSE(e.factor_hint().empty());
    }
    CHECK_THROWS_AS(EtaleAlgebra::extend(nullptr, {0, 0, 1}), NotSquarefree);
}

TEST_CASE("split etale and structure-constant algebras") {
    auto B = EtaleAlgebra::split(nullptr, 3);
    CHECK(B.norm({2, 3, 5}) == Scalar(30));
    CHECK(B.multiply(std::vector<Scalar>{1, 2, 3}, std::vector<Scalar>{4, 5, 6}) == std::vector<Scalar>{4, 10, 18});
    std::vector<std::vector<std::vector<Scalar>>> bad = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    CHECK_NOTHROW(EtaleAlgebra::from_structure(nullptr, bad, {1, 0}));
    bad[0][1] = {0, 2};  // breaks commutativity
    CHECK_THROWS(EtaleAlgebra::from_structure(nullptr, bad, {1, 0}));
}

TEST_CASE("matrix helpers") {
    Matrix<Scalar> m(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
    CHECK(determinant(m) == Scalar(18));
    CHECK(determinant_expand(m) == Scalar(18));
    CHECK(m * inverse(m) == Matrix<Scalar>::identity(3, Scalar(1)));
    Matrix<Scalar> s(2, 2, {1, 2, 2, 4});
    CHECK(rank(s) == 1);
    CHECK_THROWS_AS(inverse(s), Singular);
    auto ns = nullspace(s);
    REQUIRE(ns.size() == 1);
    CHECK(s.apply(ns[0]) == std::vector<Scalar>{0, 0});
}
