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
#include "formforge/form.hpp"

using namespace formforge;

namespace {

HomogeneousForm random_form(std::mt19937_64& gen, std::size_t n, unsigned d) {
    std::vector<Polynomial::Term> t;
    for_each_sorted_tuple(n, d, [&](const Index& idx) {
        if (gen() % 2) return;
        Monomial m(n, 0);
        for (auto i : idx) ++m[i];
        t.emplace_back(m, Scalar(static_cast<long>(gen() % 19) - 9));
    });
    Polynomial p = Polynomial::from_terms(n, t);
    if (p.is_zero()) p = Polynomial::variable(n, 0).pow(d);
    return HomogeneousForm(nullptr, d, n, p);
}

std::vector<Scalar> small_vec(std::mt19937_64& gen, std::size_t n) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(gen() % 15) - 7);
    return v;
}

}  // namespace

TEST_CASE("property: polarization round trip and agreement") {
    std::mt19937_64 gen(2024);
    for (int t = 0; t < 50; ++t) {
        unsigned d = 2 + static_cast<unsigned>(gen() % 4);
        std::size_t n = 1 + gen() % 4;
        auto phi = random_form(gen, n, d);
        auto a = polarize_alternating(phi), b = polarize_multinomial(phi);
        CHECK(a == b);
        CHECK(depolarize(a) == phi);
    }
}

TEST_CASE("property: polar form restricts to the diagonal and is symmetric") {
    std::mt19937_64 gen(77);
    for (int t = 0; t < 20; ++t) {
        unsigned d = 2 + static_cast<unsigned>(gen() % 3);
        std::size_t n = 1 + gen() % 3;
        auto phi = random_form(gen, n, d);
        auto th = polarize(phi);
        auto v = small_vec(gen, n);
        CHECK(th.evaluate(std::vector<std::vector<Scalar>>(d, v)) == phi(v));
        std::vector<std::vector<Scalar>> args;
        for (unsigned k = 0; k < d; ++k) args.push_back(small_vec(gen, n));
        auto swapped = args;
        std::swap(swapped.front(), swapped.back());
        CHECK(th.evaluate(args) == th.evaluate(swapped));
    }
}

TEST_CASE("polar entries of a cubic by hand") {
    // x^2 y: theta(e1, e1, e2) = 1/3
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    HomogeneousForm phi(nullptr, 3, 2, x * x * y);
    auto th = polarize(phi);
    CHECK(th.at({0, 0, 1}) == Scalar(Rational(1, 3)));
    CHECK(th.at({1, 0, 0}) == Scalar(Rational(1, 3)));
    CHECK(th.at({0, 0, 0}).is_zero());
}

TEST_CASE("radical") {
    Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1);
    HomogeneousForm padded(nullptr, 3, 3, x.pow(3) + y.pow(3) * Scalar(2));
    auto rad = radical(padded);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0] == std::vector<Scalar>{0, 0, 1});
    CHECK(is_nondegenerate(diagonal_form(nullptr, 3, {1, 2, 3})));
    Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1);
    CHECK(is_nondegenerate(HomogeneousForm(nullptr, 3, 2, u * v * v)));
    // (x + y)^3 in two variables has the radical spanned by (1, -1)
    auto r2 = radical(HomogeneousForm(nullptr, 3, 2, (u + v).pow(3)));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0][0] == -r2[0][1]);
}

TEST_CASE("form validation") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK_THROWS_AS(HomogeneousForm(nullptr, 3, 2, x * x + y), DegreeMismatch);
    CHECK_THROWS_AS(HomogeneousForm(nullptr, 2, 3, x * y), DimensionMismatch);
}

TEST_CASE("orthogonal sum and tensor product evaluate blockwise") {
    std::mt19937_64 gen(31);
    auto a = random_form(gen, 2, 3), b = random_form(gen, 3, 3);
    auto s = orthogonal_sum(a, b);
    auto u = small_vec(gen, 2), w = small_vec(gen, 3);
    std::vector<Scalar> uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    CHECK(s(uw) == a(u) + b(w));
    auto t = tensor_product(a, b);
    CHECK(t.dim == 6);
    std::vector<Scalar> pure;
    for (const auto& p : u)
        for (const auto& q : w) pure.push_back(p * q);
    CHECK(t(pure) == a(u) * b(w));
    CHECK(depolarize(tensor_product(polarize(a), polarize(b))) == t);
}

TEST_CASE("trace transfer against the algebra trace") {
    auto A = EtaleAlgebra::extend(nullptr, {-5, 0, 1});
    auto phi = diagonal_form(nullptr, 2, {1, 2});
    auto tr = depolarize(transfer(A, A.trace_functional(), extend_scalars(phi, A)));
    CHECK(tr.dim == 4);
    std::mt19937_64 gen(12);
    for (int k = 0; k < 10; ++k) {
        auto u = small_vec(gen, 4);
        // v_j = u_{j,0} + u_{j,1} t, index j * 2 + i
        std::vector<Scalar> v0 = {u[0], u[1]}, v1 = {u[2], u[3]};
        auto val = A.add(A.multiply(v0, v0), A.multiply(A.multiply(v1, v1), std::vector<Scalar>{2, 0}));
        CHECK(tr(u) == A.trace(val));
    }
    CHECK_THROWS_AS(transfer(A, {0, 0}, extend_scalars(phi, A)), ZeroFunctional);
}

TEST_CASE("change of basis and pullback") {
    auto phi = diagonal_form(nullptr, 3, {1, 1});
    Matrix<Scalar> f(2, 2, {1, 1, 0, 1});
    auto g = apply_change_of_basis(phi, f);
    std::vector<Scalar> v = {2, 3};
    CHECK(g(v) == phi(f.apply(v)));
    CHECK_THROWS_AS(apply_change_of_basis(phi, Matrix<Scalar>(2, 2, {1, 1, 1, 1})), Singular);
    Matrix<Scalar> P(2, 1, {1, 1});
    CHECK(pullback(phi, P).body == Polynomial::variable(1, 0).pow(3) * Scalar(2));
}
