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
#include "formforge/constructions.hpp"

using namespace formforge;

namespace {

std::vector<Scalar> rand_vec(std::mt19937_64& gen, std::size_t n, long r = 5) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(gen() % (2 * r + 1)) - r);
    return v;
}

// 3 x 3 helpers, row-major
Scalar det3(const std::vector<Scalar>& m, std::size_t o = 0) {
    auto e = [&](int i, int j) { return m[o + i * 3 + j]; };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

std::vector<Scalar> adj3(const std::vector<Scalar>& m, std::size_t o = 0) {
    auto e = [&](int i, int j) { return m[o + i * 3 + j]; };
    std::vector<Scalar> a(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a[i * 3 + j] = e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0);
        }
    return a;
}

Scalar trace_prod(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar s;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) s += x[i * 3 + k] * y[k * 3 + i];
    return s;
}

}  // namespace

TEST_CASE("simple constructions") {
    auto d = diagonal(nullptr, 3, {1, 2});
    CHECK(d.form.degree == 3);
    CHECK(d.form(std::vector<Scalar>{1, 1}) == Scalar(3));
    auto m = monomial({2, 3});
    CHECK(m.form.degree == 5);
    CHECK(m.form(std::vector<Scalar>{2, 3}) == Scalar(4 * 27));
    auto h = hyperbolic_plane().form;
    auto p = product_form({{h, 2}, {diagonal_form(nullptr, 1, {1}), 1}});
    CHECK(p.form.degree == 5);
    CHECK(p.form(std::vector<Scalar>{3, 1, 2}) == Scalar(64 * 2));
}

TEST_CASE("det2 body") {
    Polynomial x0 = Polynomial::variable(4, 0), x1 = Polynomial::variable(4, 1), x2 = Polynomial::variable(4, 2),
               x3 = Polynomial::variable(4, 3);
    CHECK(det_norm(2).form.body == x0 * x3 - x1 * x2);
    std::mt19937_64 gen(5);
    auto det3f = det_norm(3).form;
    for (int k = 0; k < 10; ++k) {
        auto v = rand_vec(gen, 9);
        CHECK(det3f(v) == det3(v));
    }
    CHECK_THROWS(det_norm(5));
}

TEST_CASE("composition algebra norms") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK(composition_algebra_norm({3}).form.body == x * x - y * y * Scalar(3));
    auto oct = composition_algebra_norm({-1, -1, -1});
    CHECK(oct.form.dim == 8);
    // sum of squares for all parameters -1
    std::vector<Scalar> v = {1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(oct.form(v) == Scalar(204));
    CHECK(oct.composition.has_value());
}

TEST_CASE("tits cubic matches the regular representation determinant") {
    std::mt19937_64 gen(8);
    for (long a : {1L, 2L, -3L}) {
        auto t = tits_cubic(Scalar(a)).form;
        for (int k = 0; k < 8; ++k) {
            auto v = rand_vec(gen, 3);
            Scalar A(a);
            std::vector<Scalar> m = {v[0], A * v[2], A * v[1], v[1], v[0], A * v[2], v[2], v[1], v[0]};
            CHECK(t(v) == det3(m));
        }
    }
    auto t2 = tits_cubic(Scalar(2)).form;
    CHECK(t2(std::vector<Scalar>{1, 1, 1}) == Scalar(1 + 2 + 4 - 6));
    VerifyOptions o;
    o.mode = VerifyMode::Symbolic;
    CHECK(verify_tits_cubic_generic(o).proved());
}

TEST_CASE("norm composition closed form for quadratic algebras") {
    for (auto [c, a] : std::vector<std::pair<long, long>>{{5, 2}, {3, -1}, {-2, 7}}) {
        auto A = EtaleAlgebra::extend(nullptr, {Scalar(-c), 0, 1});
        auto phi0 = diagonal_form(nullptr, 2, {1, Scalar(a)});
        auto nc = norm_compose(A, phi0);
        auto u = [](std::size_t i) { return Polynomial::variable(4, i); };
        Scalar C(c), Aa(a);
        Polynomial P = u(0) * u(0) + u(1) * u(1) * C + (u(2) * u(2) + u(3) * u(3) * C) * Aa;
        Polynomial Q = u(0) * u(1) * Scalar(2) + u(2) * u(3) * Scalar(2) * Aa;
        CHECK(nc.form.body == P * P - Q * Q * C);
        CHECK(norm_compose_conjugates(A, phi0, Scalar(-1)) == nc.form);
    }
}

TEST_CASE("norm composition over a cubic Kummer algebra") {
    auto K = NumberField::create({1, 1, 1});
    auto A = EtaleAlgebra::extend(K, {-2, 0, 0, 1});
    auto phi0 = diagonal_form(K, 2, {1, 2});
    auto nc = norm_compose(A, phi0);
    CHECK(nc.form.degree == 6);
    CHECK(nc.form.dim == 6);
    CHECK(is_nondegenerate(nc.form));
    Scalar w = Scalar::generator(K);
    CHECK(norm_compose_conjugates(A, phi0, w) == nc.form);
    CHECK_THROWS(norm_compose_conjugates(A, phi0, Scalar(1)));
}

TEST_CASE("radical of phi0 lifts into the radical of the composed form") {
    auto A = EtaleAlgebra::extend(nullptr, {-5, 0, 1});
    auto phi0 = diagonal_form(nullptr, 2, {1, 2, 0});
    auto nc = norm_compose(A, phi0);
    auto th = polarize(nc.form);
    std::mt19937_64 gen(3);
    for (std::size_t i : {4u, 5u}) {
        std::vector<Scalar> e(6);
        e[i] = 1;
        for (int k = 0; k < 5; ++k) CHECK(th.evaluate({e, rand_vec(gen, 6), rand_vec(gen, 6), rand_vec(gen, 6)}).is_zero());
    }
    CHECK(radical(nc.form).size() == 2);
}

TEST_CASE("split albert norm") {
    auto alb = split_albert_norm();
    auto A = *alb.algebra;
    CHECK(alb.form(A.unit) == Scalar(1));
    std::vector<Scalar> d(27);
    d[0] = 2;
    d[1] = 3;
    d[2] = 5;
    CHECK(alb.form(d) == Scalar(30));
    // sharp of sharp at random points
    std::mt19937_64 gen(21);
    const auto& sh = *alb.sharp;
    for (int k = 0; k < 3; ++k) {
        auto x = rand_vec(gen, 27, 3);
        std::vector<Scalar> s1, s2;
        for (const auto& p : sh) s1.push_back(p.evaluate(x));
        for (const auto& p : sh) s2.push_back(p.evaluate(s1));
        auto n = alb.form(x);
        for (std::size_t i = 0; i < 27; ++i) CHECK(s2[i] == n * x[i]);
    }
}

TEST_CASE("admissible triple from the diagonal cubic algebra") {
    auto t = jordan_triple_from_degree3(split_etale_algebra(3), Scalar(1));
    auto j = [](std::size_t i) { return Polynomial::variable(3, i); };
    REQUIRE(t.sharp.size() == 3);
    CHECK(t.sharp[0] == j(1) * j(2));
    CHECK(t.sharp[1] == j(0) * j(2));
    CHECK(t.sharp[2] == j(0) * j(1));
    CHECK(adjoint_identities_hold(t));
    CHECK(adjoint_identities_hold(jordan_triple_from_degree3(matrix_algebra(3), Scalar(2))));
    Matrix<Scalar> T0(3, 3);
    CHECK_THROWS_AS(make_admissible_triple(T0, t.N, t.Np), DegeneratePairing);
}

TEST_CASE("structurable quartic from 3 x 3 matrices") {
    auto t = jordan_triple_from_degree3(matrix_algebra(3), Scalar(1));
    auto q = structurable_quartic(t).form;
    REQUIRE(q.dim == 20);
    std::mt19937_64 gen(4);
    for (int k = 0; k < 6; ++k) {
        auto x = rand_vec(gen, 20, 3);
        std::vector<Scalar> j(x.begin() + 1, x.begin() + 10), jp(x.begin() + 10, x.begin() + 19);
        Scalar a = x[0], b = x[19];
        Scalar ab = a * b - trace_prod(j, jp);
        Scalar expect = Scalar(4) * a * det3(j) + Scalar(4) * b * det3(jp) -
                        Scalar(4) * trace_prod(adj3(jp), adj3(j)) + ab * ab;
        CHECK(q(x) == expect);
    }
    std::vector<Scalar> ab(20);
    ab[0] = 3;
    ab[19] = 5;
    CHECK(q(ab) == Scalar(225));
    VerifyOptions o;
    o.mode = VerifyMode::Symbolic;
    CHECK(structurable_cross_check(jordan_triple_from_degree3(split_etale_algebra(3), Scalar(1)), o).proved());
}

TEST_CASE("cayley-dickson quartic over k^4") {
    auto B = split_etale_algebra(4);
    for (long mu : {1L, 3L}) {
        auto q = cayley_dickson_quartic(B, Scalar(mu)).form;
        REQUIRE(q.dim == 8);
        std::mt19937_64 gen(mu);
        Scalar M(mu);
        for (int k = 0; k < 6; ++k) {
            auto x = rand_vec(gen, 8);
            Scalar p1(1), p2(1), u, t;
            for (int i = 0; i < 4; ++i) {
                p1 *= x[i];
                p2 *= x[4 + i];
                u += x[i] * x[i] * x[4 + i] * x[4 + i];
                t += x[i] * x[4 + i];
            }
            CHECK(q(x) == p1 + M * M * p2 + M / Scalar(2) * u - M / Scalar(4) * t * t);
        }
        std::vector<Scalar> one(8);
        for (int i = 0; i < 4; ++i) one[i] = 1;
        CHECK(q(one) == Scalar(1));
        std::vector<Scalar> b2 = {0, 0, 0, 0, 1, 2, 3, 4};
        CHECK(q(b2) == M * M * Scalar(24));
        CHECK(is_nondegenerate(q));
    }
    auto th = quartic_theta(B);
    CHECK(th * th == Matrix<Scalar>::identity(4, Scalar(1)));
}

TEST_CASE("power and block sum") {
    auto h = hyperbolic_plane();
    auto p = power_form(h, 3);
    CHECK(p.form.body == h.form.body.pow(3));
    REQUIRE(p.witness.has_value());
    CHECK(verify_scaled_witness(p.form, *p.witness, {}).proved());
    auto bs = scaled_block_sum(det_norm(2), {1, 3});
    CHECK(bs.form.dim == 8);
    CHECK(verify_scaled_witness(bs.form, *bs.witness, {}).proved());
    CHECK_THROWS_AS(scaled_block_sum(diagonal(nullptr, 3, {1}), {1, 2}), MissingWitness);
}

TEST_CASE("catalog") {
    auto all = catalog();
    CHECK(all.size() == 20);
    for (const auto& c : all) {
        CHECK_FALSE(c.kind.empty());
        CHECK(c.form.body.homogeneous_degree() == std::optional<unsigned>(c.form.degree));
    }
}
