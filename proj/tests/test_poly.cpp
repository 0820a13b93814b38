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
#include "formforge/identity.hpp"
#include "formforge/polynomial.hpp"

using namespace formforge;

namespace {

Polynomial random_poly(std::mt19937_64& gen, std::size_t n, unsigned maxdeg, int terms) {
    std::vector<Polynomial::Term> t;
    for (int k = 0; k < terms; ++k) {
        Monomial m(n, 0);
        unsigned left = static_cast<unsigned>(gen() % (maxdeg + 1));
        for (std::size_t i = 0; i < n && left; ++i) {
            unsigned e = static_cast<unsigned>(gen() % (left + 1));
            m[i] = static_cast<std::uint16_t>(e);
            left -= e;
        }
        t.emplace_back(m, Scalar(static_cast<long>(gen() % 19) - 9));
    }
    return Polynomial::from_terms(n, t);
}

Polynomial random_form(std::mt19937_64& gen, std::size_t n, unsigned d, int terms) {
    Polynomial p = random_poly(gen, n, d, terms * 3).homogeneous_part(d);
    return p.is_zero() ? Polynomial::variable(n, 0).pow(d) : p;
}

std::vector<Scalar> small_point(std::mt19937_64& gen, std::size_t n) {
    std::vector<Scalar> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(static_cast<long>(gen() % 21) - 10);
    return x;
}

// A form is a constant times the d-th power of a linear form iff its
// Hessian has rank <= 1, i.e. every 2 x 2 minor vanishes.
bool hessian_rank_at_most_one(const Polynomial& p) {
    const std::size_t n = p.nvars();
    std::vector<std::vector<Polynomial>> H(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H[i][j] = p.derivative(i).derivative(j);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (!(H[a][c] * H[b][d] - H[a][d] * H[b][c]).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("polynomial printing and canonical order") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = y * y + x * Scalar(3) + x * x * y;
    CHECK(p.to_string() == "x1^2*x2 + x2^2 + 3*x1");
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.homogeneous_degree());
    CHECK((x + y).pow(2).homogeneous_degree() == 2u);
    CHECK((p - p).is_zero());
}

TEST_CASE("constants promote to any arity") {
    Polynomial x = Polynomial::variable(3, 1);
    Polynomial c(Scalar(5));
    CHECK((x + c).nvars() == 3);
    CHECK((c * x) == x * Scalar(5));
    Polynomial acc;
    acc += x;
    CHECK(acc == x);
    Polynomial d = c;
    d += Polynomial(std::size_t{3});
    CHECK(d.nvars() == 3);
    CHECK(d * x == x * Scalar(5));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 gen(21);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + gen() % 4;
        auto p = random_poly(gen, n, 4, 5), q = random_poly(gen, n, 4, 5);
        auto x = small_point(gen, n);
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
        CHECK(p.pow(3).evaluate(x) == p.evaluate(x).pow(3));
    }
}

TEST_CASE("property: exact division recovers factors") {
    std::mt19937_64 gen(5);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + gen() % 3;
        auto p = random_poly(gen, n, 3, 4), q = random_poly(gen, n, 3, 4);
        if (q.is_zero() || p.is_zero()) continue;
        CHECK(exact_div(p * q, q) == p);
        auto r = try_exact_div(p * q + Polynomial::constant(n, 1), q);
        if (q.total_degree() > 0 && r) CHECK(*r * q == p * q + Polynomial::constant(n, 1));
    }
    Polynomial x = Polynomial::variable(1, 0);
    CHECK_THROWS_AS(exact_div(x * x + Polynomial(1), x), NotDivisible);
}

TEST_CASE("compose, shift and specialize agree with evaluation") {
    std::mt19937_64 gen(8);
    auto p = random_poly(gen, 2, 3, 5);
    Polynomial u = Polynomial::variable(3, 0), v = Polynomial::variable(3, 2);
    auto q = p.compose({u + v, u * v});
    auto x = small_point(gen, 3);
    CHECK(q.evaluate(x) == p.evaluate({x[0] + x[2], x[0] * x[2]}));
    CHECK(p.shifted(5, 2).evaluate({9, 9, x[0], x[1], 9}) == p.evaluate({x[0], x[1]}));
    CHECK(p.specialize({0}, {x[0]}).evaluate({Scalar(77), x[1]}) == p.evaluate({x[0], x[1]}));
}

TEST_CASE("rational functions") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    RationalFunction a(x, y), b(y, x + y);
    auto s = a + b, p = a * b;
    std::vector<Scalar> pt = {3, 5};
    CHECK(s.evaluate(pt) == Scalar(Rational(3, 5)) + Scalar(Rational(5, 8)));
    CHECK(p.evaluate(pt) == Scalar(Rational(3, 8)));
    CHECK((a / a) == RationalFunction(1));
    CHECK(RationalFunction(x * y, y * y) == RationalFunction(x, y));
    CHECK_THROWS_AS(a.evaluate({1, 0}), ZeroDivisor);
}

TEST_CASE("linear substitution against evaluation") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2, n = 2;
        Polynomial phi = random_form(gen, n, 3, 3);
        Polynomial x1 = Polynomial::variable(m, 0), x2 = Polynomial::variable(m, 1);
        Matrix<RationalFunction> M(n, n, {RationalFunction(x1, x2 + Polynomial(1)), RationalFunction(x2),
                                          RationalFunction(Scalar(2)), RationalFunction(x1 * x1, x2 + Polynomial(1))});
        auto [q, D] = substitute_linear(phi, M, m);
        for (int k = 0; k < 5; ++k) {
            auto pt = small_point(gen, m + n);
            std::vector<Scalar> X(pt.begin(), pt.begin() + 2), Y(pt.begin() + 2, pt.end());
            if (D.evaluate(X).is_zero()) continue;
            auto Mx = M.map([&](const RationalFunction& f) { return f.evaluate(X); });
            CHECK(q.evaluate(pt) == D.evaluate(X).pow(3) * phi.evaluate(Mx.apply(Y)));
        }
    }
}

TEST_CASE("perfect powers: known constructions are found") {
    std::mt19937_64 gen(99);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + gen() % 3;
        unsigned d = 2 + static_cast<unsigned>(gen() % 3);
        Polynomial g = random_poly(gen, n, 2, 3);
        if (g.total_degree() < 1) continue;
        Scalar c(static_cast<long>(gen() % 7) + 1);
        auto r = is_dth_power(g.pow(d) * c, d);
        REQUIRE(r);
        CHECK(r->second.pow(d) * r->first == g.pow(d) * c);
        CHECK(r->second.leading_term().second.is_one());
    }
}

TEST_CASE("perfect powers agree with the Hessian oracle on binary cubics") {
    // x^3 + a y^3 and friends: compare against rank(Hessian) <= 1
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    std::vector<Polynomial> cases = {x.pow(3) + y.pow(3) * Scalar(2), (x + y * Scalar(2)).pow(3) * Scalar(5),
                                     x.pow(3), x * x * y, (x - y).pow(3) * Scalar(-3), x.pow(3) + y.pow(3)};
    for (const auto& p : cases) CHECK(bool(is_dth_power(p, 3)) == hessian_rank_at_most_one(p));
    std::mt19937_64 gen(4);
    for (int t = 0; t < 40; ++t) {
        Polynomial p = random_form(gen, 2, 3, 2);
        CHECK(bool(is_dth_power(p, 3)) == hessian_rank_at_most_one(p));
    }
}

TEST_CASE("perfect powers refuse non-powers") {
    Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
    CHECK_FALSE(is_dth_power(x * y * z, 3));
    CHECK_FALSE(is_dth_power(x * x - y * y, 2));
    CHECK_FALSE(is_dth_power((x + y).pow(2) * z, 3));
    CHECK(is_dth_power((x * y + z * z).pow(2), 2));
    // the origin is a zero of this one, so the shift point matters
    CHECK(is_dth_power((x * y - z * z).pow(3) * Scalar(4), 3));
}

TEST_CASE("identity verification modes") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    auto lhs = (x + y).pow(3), rhs = x.pow(3) + x * x * y * Scalar(3) + x * y * y * Scalar(3) + y.pow(3);
    auto r = verify_identity(lhs, rhs, {VerifyMode::Symbolic});
    CHECK(r.proved());
    r = verify_identity(lhs, rhs, {VerifyMode::Random, 50, 9});
    CHECK(r.verdict == Verdict::Evidence);
    CHECK(r.per_sample_bound == Rational(3, kBoxSize));
    auto bad = verify_identity(lhs, rhs + x, {VerifyMode::Symbolic});
    REQUIRE(bad.refuted());
    CHECK(lhs.evaluate(bad.point) != (rhs + x).evaluate(bad.point));
    bad = verify_identity(lhs, rhs + x, {VerifyMode::Random, 50, 9});
    REQUIRE(bad.refuted());
    CHECK(lhs.evaluate(bad.point) != (rhs + x).evaluate(bad.point));
}
