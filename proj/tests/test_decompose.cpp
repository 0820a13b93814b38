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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "formforge/constructions.hpp"
#include "formforge/decompose.hpp"

using namespace formforge;

namespace {

std::vector<std::size_t> dims(const Decomposition& d) {
    std::vector<std::size_t> r;
    for (const auto& c : d.components) r.push_back(c.form.dim);
    std::sort(r.begin(), r.end());
    return r;
}

void check_idempotents(const Decomposition& dec, std::size_t n) {
    Matrix<Scalar> sum(n, n);
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
        const auto& e = dec.idempotents[i];
        sum = sum + e;
        for (std::size_t j = 0; j < dec.idempotents.size(); ++j) {
            auto p = e * dec.idempotents[j];
            CHECK(p == (i == j ? e : Matrix<Scalar>(n, n)));
        }
    }
    CHECK(sum == Matrix<Scalar>::identity(n, Scalar(1)));
}

}  // namespace

TEST_CASE("center algebra dimensions") {
    CHECK(center_algebra(polarize(diagonal_form(nullptr, 3, {1, 2}))).dim() == 2);
    CHECK(center_algebra(polarize(diagonal_form(nullptr, 3, {1}))).dim() == 1);
    CHECK_THROWS_AS(center_algebra(polarize(diagonal_form(nullptr, 2, {1, 1}))), DegreeTooSmall);
    CHECK_THROWS_AS(center_algebra(polarize(diagonal_form(nullptr, 3, {1, 0}))), DegenerateInput);
    // center elements slide between slots
    auto th = polarize(monomial({1, 2}).form);
    auto Z = center_algebra(th);
    std::vector<Scalar> a = {1, 2}, b = {3, -1}, c = {2, 5};
    for (const auto& f : Z.basis)
        CHECK(th.evaluate({f.apply(a), b, c}) == th.evaluate({a, f.apply(b), c}));
}

TEST_CASE("diagonal cubic splits into its coefficients") {
    auto phi = diagonal_form(nullptr, 3, {1, 2, 3});
    auto dec = krull_schmidt_decompose(phi);
    REQUIRE(dec.components.size() == 3);
    Polynomial x = Polynomial::variable(1, 0);
    for (int i = 0; i < 3; ++i) CHECK(dec.components[i].form.body == x.pow(3) * Scalar(i + 1));
    CHECK(reconstruction_holds(phi, dec));
    check_idempotents(dec, 3);
    CHECK_FALSE(is_absolutely_indecomposable(diagonal_form(nullptr, 3, {1, 1})));
}

TEST_CASE("indecomposable examples") {
    auto mono = monomial({1, 2}).form;
    auto dec = krull_schmidt_decompose(mono);
    CHECK(dec.components.size() == 1);
    CHECK(is_absolutely_indecomposable(mono));
    CHECK(reconstruction_holds(mono, dec));

    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    HomogeneousForm sq(nullptr, 4, 2, (x * x - y * y).pow(2));
    CHECK(is_absolutely_indecomposable(sq));

    auto tits = tits_cubic(Scalar(2)).form;
    CHECK(krull_schmidt_decompose(tits).components.size() == 1);
    CHECK_THROWS_AS(krull_schmidt_decompose(diagonal_form(nullptr, 2, {1, 1})), DegreeTooSmall);
}

TEST_CASE("decomposition is deterministic") {
    auto phi = orthogonal_sum(monomial({1, 2}).form, diagonal_form(nullptr, 3, {5, 7}));
    auto first = krull_schmidt_decompose(phi);
    for (int k = 0; k < 5; ++k) {
        auto again = krull_schmidt_decompose(phi);
        REQUIRE(again.components.size() == first.components.size());
        for (std::size_t i = 0; i < first.components.size(); ++i) {
            CHECK(again.components[i].form == first.components[i].form);
            CHECK(again.components[i].basis == first.components[i].basis);
        }
    }
}

TEST_CASE("property: decomposition of an orthogonal sum is the union") {
    std::mt19937_64 gen(99);
    std::vector<HomogeneousForm> pool = {
        monomial({1, 2}).form,
        diagonal_form(nullptr, 3, {2}),
        diagonal_form(nullptr, 3, {1, 3}),
        tits_cubic(Scalar(2)).form,
        product_form({{diagonal_form(nullptr, 2, {1, -1}), 1}, {diagonal_form(nullptr, 1, {1}), 1}}).form,
    };
    for (int t = 0; t < 12; ++t) {
        const auto& a = pool[gen() % pool.size()];
        const auto& b = pool[gen() % pool.size()];
        auto da = krull_schmidt_decompose(a), db = krull_schmidt_decompose(b);
        auto s = orthogonal_sum(a, b);
        auto ds = krull_schmidt_decompose(s);
        auto u = dims(da), v = dims(db);
        u.insert(u.end(), v.begin(), v.end());
        std::sort(u.begin(), u.end());
        CHECK(dims(ds) == u);
        CHECK(reconstruction_holds(s, ds));
        check_idempotents(ds, s.dim);
    }
}
