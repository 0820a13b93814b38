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

#include "formforge/decompose.hpp"

#include <algorithm>
#include <random>

#include "formforge/errors.hpp"
#include "formforge/factor.hpp"

namespace formforge {

namespace {

using Mat = Matrix<Scalar>;

std::vector<Scalar> flatten(const Mat& m) { return m.entries(); }

Mat unflatten(std::size_t n, const std::vector<Scalar>& v) { return Mat(n, n, v); }

Scalar trace_of(const Mat& m) {
    Scalar t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

std::size_t trace_rank(const std::vector<Mat>& basis) {
    const std::size_t s = basis.size();
    Mat G(s, s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a; b < s; ++b) G(a, b) = G(b, a) = trace_of(basis[a] * basis[b]);
    return rank(G);
}

// Basis of the span of the given matrices.
std::vector<Mat> span_basis(std::size_t n, const std::vector<Mat>& gens) {
    IncrementalEchelon ech(n * n);
    std::vector<Mat> out;
    for (const auto& g : gens)
        if (ech.add(flatten(g))) out.push_back(g);
    return out;
}

// Minimal polynomial of z in an algebra with unit e.
KPoly minimal_polynomial(const Mat& z, const Mat& e) {
    const std::size_t n = z.rows();
    std::vector<Mat> powers{e};
    for (std::size_t k = 1;; ++k) {
        Mat next = powers.back() * z;
        Mat A(n * n, k);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t r = 0; r < n * n; ++r) A(r, c) = powers[c].entries()[r];
        if (auto sol = solve(A, flatten(next))) {
            std::vector<Scalar> coeffs(k + 1);
            for (std::size_t c = 0; c < k; ++c) coeffs[c] = -(*sol)[c];
            coeffs[k] = Scalar(1);
            return KPoly(std::move(coeffs));
        }
        powers.push_back(std::move(next));
        if (k > n * n + 1) throw InvalidArgument("minimal polynomial search did not terminate");
    }
}

Mat evaluate_at(const KPoly& f, const Mat& z, const Mat& e) {
    Mat acc(z.rows(), z.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * z + e.scaled(f.coeffs()[i]);
    return acc;
}

// Splits the block with unit e into primitive idempotents of the center.
void split_block(const Mat& e, const std::vector<Mat>& center, const Field& field, std::vector<Mat>& out) {
    const std::size_t n = e.rows();
    std::vector<Mat> gens;
    for (const auto& z : center) gens.push_back(e * z);
    auto basis = span_basis(n, gens);
    const std::size_t r = trace_rank(basis);
    if (r <= 1) {
        out.push_back(e);
        return;
    }
    std::mt19937_64 gen(0xce17e2ULL);
    for (std::size_t attempt = 0; attempt < 400; ++attempt) {
        Mat z(n, n);
        if (attempt < basis.size()) z = basis[attempt];
        else {
            long span = 3 + static_cast<long>(attempt / basis.size());
            for (const auto& b : basis) z = z + b.scaled(Scalar(static_cast<long>(gen() % static_cast<std::uint64_t>(2 * span + 1)) - span));
        }
        KPoly mu = minimal_polynomial(z, e);
        auto factors = factor(mu, field);
        if (factors.size() == 1) {
            if (static_cast<std::size_t>(factors[0].first.degree()) == r) {
                out.push_back(e);
                return;
            }
            continue;
        }
        for (const auto& [p, k] : factors) {
            KPoly q = KPoly::constant(Scalar(1));
            for (unsigned i = 0; i < k; ++i) q = q * p;
            KPoly Q = mu / q;
            auto [g, s, t] = xgcd(Q, q);
            KPoly u = (s * Q) % mu;
            split_block(evaluate_at(u, z, e), center, field, out);
        }
        return;
    }
    throw InvalidArgument("idempotent splitting did not find a separating element");
}

}  // namespace

CenterAlgebra center_algebra(const SymmetricTensor& theta) {
    const unsigned d = theta.degree;
    const std::size_t n = theta.dim;
    if (d < 3) throw DegreeTooSmall("center algebra needs degree >= 3, got " + std::to_string(d));
    if (!radical(theta).empty()) throw DegenerateInput("form has a nonzero radical");
    IncrementalEchelon ech(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for_each_sorted_tuple(n, d - 2, [&](const Index& K) {
                if (ech.full()) return;
                std::vector<Scalar> row(n * n, Scalar(0));
                bool any = false;
                for (std::size_t l = 0; l < n; ++l) {
                    Index a = K, b = K;
                    a.push_back(static_cast<std::uint16_t>(l));
                    a.push_back(static_cast<std::uint16_t>(j));
                    b.push_back(static_cast<std::uint16_t>(i));
                    b.push_back(static_cast<std::uint16_t>(l));
                    Scalar x = theta.at(a), y = theta.at(b);
                    if (!x.is_zero()) {
                        row[l * n + i] += x;
                        any = true;
                    }
                    if (!y.is_zero()) {
                        row[l * n + j] -= y;
                        any = true;
                    }
                }
                if (any) ech.add(std::move(row));
            });
    CenterAlgebra Z{theta.field, n, {}};
    for (auto& v : ech.nullspace()) Z.basis.push_back(unflatten(n, v));
    for (std::size_t a = 0; a < Z.dim(); ++a)
        for (std::size_t b = a + 1; b < Z.dim(); ++b)
            if (Z.basis[a] * Z.basis[b] != Z.basis[b] * Z.basis[a])
                throw NonCommutativeCenter("center algebra is not commutative");
    return Z;
}

std::size_t semisimple_dimension(const CenterAlgebra& Z) { return trace_rank(Z.basis); }

Matrix<Scalar> Decomposition::change_of_basis() const {
    if (components.empty()) return {};
    const std::size_t n = components[0].basis.rows();
    Mat P(n, n);
    std::size_t c = 0;
    for (const auto& comp : components)
        for (std::size_t j = 0; j < comp.basis.cols(); ++j, ++c)
            for (std::size_t i = 0; i < n; ++i) P(i, c) = comp.basis(i, j);
    return P;
}

Decomposition krull_schmidt_decompose(const HomogeneousForm& phi) {
    CenterAlgebra Z = center_algebra(polarize(phi));
    const std::size_t n = phi.dim;
    Decomposition dec;
    dec.center_dim = Z.dim();
    dec.semisimple_dim = semisimple_dimension(Z);
    std::vector<Mat> idem;
    split_block(Mat::identity(n, Scalar(1)), Z.basis, phi.field, idem);
    std::vector<std::pair<Component, Mat>> parts;
    for (auto& e : idem) {
        Mat t = e.transpose();
        auto piv = rref(t);
        Mat B(n, piv.size());
        for (std::size_t j = 0; j < piv.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) B(i, j) = t(j, i);
        HomogeneousForm f = pullback(phi, B);
        parts.push_back({Component{B, f}, e});
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.form.dim != b.first.form.dim) return a.first.form.dim < b.first.form.dim;
        int c = Polynomial::compare(a.first.form.body, b.first.form.body);
        if (c) return c < 0;
        const auto& x = a.first.basis.entries();
        const auto& y = b.first.basis.entries();
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
            if (int s = Scalar::compare(x[i], y[i])) return s > 0;
        return false;
    });
    for (auto& [c, e] : parts) {
        dec.components.push_back(std::move(c));
        dec.idempotents.push_back(std::move(e));
    }
    return dec;
}

bool is_absolutely_indecomposable(const HomogeneousForm& phi) {
    return semisimple_dimension(center_algebra(polarize(phi))) == 1;
}

bool reconstruction_holds(const HomogeneousForm& phi, const Decomposition& dec) {
    if (dec.components.empty()) return false;
    HomogeneousForm sum = dec.components[0].form;
    for (std::size_t i = 1; i < dec.components.size(); ++i) sum = orthogonal_sum(sum, dec.components[i].form);
    return pullback(phi, dec.change_of_basis()).body == sum.body;
}

}  // namespace formforge
