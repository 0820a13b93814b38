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

#include "formforge/form.hpp"

#include <algorithm>

#include "formforge/errors.hpp"

namespace formforge {

namespace {

Polynomial with_arity(const Polynomial& p, std::size_t n) {
    if (p.nvars() == n) return p;
    return p + Polynomial(n);
}

std::vector<unsigned> counts_of(const Index& idx, std::size_t n) {
    std::vector<unsigned> e(n, 0);
    for (auto i : idx) ++e[i];
    return e;
}

Index sorted(Index idx) {
    std::sort(idx.begin(), idx.end());
    return idx;
}

Index index_of(const Monomial& m) {
    Index idx;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) idx.push_back(static_cast<std::uint16_t>(i));
    return idx;
}

}  // namespace

HomogeneousForm::HomogeneousForm(Field f, unsigned d, std::size_t n, Polynomial p)
    : field(std::move(f)), degree(d), dim(n), body(std::move(p)) {
    if (degree == 0) throw InvalidArgument("form degree must be at least 1");
    if (dim == 0) throw InvalidArgument("form dimension must be at least 1");
    if (body.nvars() != dim) {
        if (body.nvars() != 0 || !body.is_zero())
            throw DimensionMismatch("form body has " + std::to_string(body.nvars()) +
                                    " variables, expected " + std::to_string(dim));
        body = Polynomial(dim);
    }
    if (!body.is_zero()) {
        auto h = body.homogeneous_degree();
        if (!h || *h != degree)
            throw DegreeMismatch("form body is not homogeneous of degree " + std::to_string(degree));
    }
    Field bf = body.field();
    if (bf && !same_field(bf, field))
        throw FieldMismatch("coefficients in " + field_name(bf) + " for a form over " + field_name(field));
}

HomogeneousForm diagonal_form(const Field& field, unsigned degree, const std::vector<Scalar>& a) {
    const std::size_t n = a.size();
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = static_cast<std::uint16_t>(degree);
        p += Polynomial::monomial(n, std::move(m), a[i]);
    }
    return HomogeneousForm(field, degree, n, std::move(p));
}

HomogeneousForm scaled(const HomogeneousForm& phi, const Scalar& a) {
    return HomogeneousForm(phi.field, phi.degree, phi.dim, phi.body * a);
}

void for_each_sorted_tuple(std::size_t n, unsigned d, const std::function<void(const Index&)>& f) {
    Index idx(d, 0);
    if (n == 0) return;
    for (;;) {
        f(idx);
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == n - 1) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t j = k; j < d; ++j) idx[j] = idx[k - 1];
    }
}

Scalar SymmetricTensor::at(Index idx) const {
    if (idx.size() != degree) throw DimensionMismatch("tensor index length");
    auto it = entries.find(sorted(std::move(idx)));
    return it == entries.end() ? Scalar(0) : it->second;
}

void SymmetricTensor::set(Index idx, const Scalar& v) {
    if (idx.size() != degree) throw DimensionMismatch("tensor index length");
    for (auto i : idx)
        if (i >= dim) throw DimensionMismatch("tensor index out of range");
    idx = sorted(std::move(idx));
    if (v.is_zero()) entries.erase(idx);
    else entries[idx] = v;
}

Scalar SymmetricTensor::evaluate(const std::vector<std::vector<Scalar>>& vs) const {
    if (vs.size() != degree) throw DimensionMismatch("tensor needs one vector per slot");
    for (const auto& v : vs)
        if (v.size() != dim) throw DimensionMismatch("tensor argument length");
    Scalar acc(0);
    // sum over all index tuples, grouped by sorted representative
    Index idx(degree, 0);
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t slot, Scalar w) {
        if (w.is_zero()) return;
        if (slot == degree) {
            acc += w * at(idx);
            return;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            idx[slot] = static_cast<std::uint16_t>(i);
            rec(slot + 1, w * vs[slot][i]);
        }
    };
    rec(0, Scalar(1));
    return acc;
}

std::vector<Scalar> AlgebraTensor::at(Index idx) const {
    auto it = entries.find(sorted(std::move(idx)));
    return it == entries.end() ? std::vector<Scalar>(algebra.dim()) : it->second;
}

void AlgebraTensor::set(Index idx, std::vector<Scalar> v) {
    idx = sorted(std::move(idx));
    bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
    if (zero) entries.erase(idx);
    else entries[idx] = std::move(v);
}

SymmetricTensor polarize_alternating(const HomogeneousForm& phi) {
    SymmetricTensor t{phi.field, phi.degree, phi.dim, {}};
    const unsigned d = phi.degree;
    Scalar inv_fact = Scalar(Rational(1) / Rational(factorial(d)));
    for_each_sorted_tuple(phi.dim, d, [&](const Index& idx) {
        Scalar acc(0);
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            std::vector<Scalar> v(phi.dim, Scalar(0));
            unsigned size = 0;
            for (unsigned s = 0; s < d; ++s)
                if (mask >> s & 1u) {
                    v[idx[s]] += Scalar(1);
                    ++size;
                }
            Scalar val = phi(v);
            if ((d - size) % 2) acc -= val;
            else acc += val;
        }
        t.set(idx, acc * inv_fact);
    });
    return t;
}

SymmetricTensor polarize_multinomial(const HomogeneousForm& phi) {
    SymmetricTensor t{phi.field, phi.degree, phi.dim, {}};
    for (const auto& [m, c] : phi.body.terms()) {
        Integer mult = multinomial(std::span<const std::uint16_t>(m));
        t.set(index_of(m), c * Scalar(Rational(1) / Rational(mult)));
    }
    return t;
}

SymmetricTensor polarize(const HomogeneousForm& phi) { return polarize_multinomial(phi); }

HomogeneousForm depolarize(const SymmetricTensor& theta) {
    std::vector<Polynomial::Term> terms;
    for (const auto& [idx, c] : theta.entries) {
        auto e = counts_of(idx, theta.dim);
        Monomial m(e.begin(), e.end());
        terms.emplace_back(m, c * Scalar(Rational(multinomial(std::span<const unsigned>(e)))));
    }
    return HomogeneousForm(theta.field, theta.degree, theta.dim,
                           Polynomial::from_terms(theta.dim, std::move(terms)));
}

std::vector<std::vector<Scalar>> radical(const SymmetricTensor& theta) {
    const std::size_t n = theta.dim;
    // row K (sorted (d-1)-tuple), column j: theta(e_j, e_K)
    std::map<Index, std::vector<Scalar>> rows;
    for (const auto& [idx, c] : theta.entries) {
        for (std::size_t p = 0; p < idx.size(); ++p) {
            if (p > 0 && idx[p] == idx[p - 1]) continue;
            Index k = idx;
            k.erase(k.begin() + static_cast<std::ptrdiff_t>(p));
            auto& row = rows[k];
            if (row.empty()) row.assign(n, Scalar(0));
            row[idx[p]] = c;
        }
    }
    IncrementalEchelon ech(n);
    for (auto& [k, row] : rows) {
        ech.add(std::move(row));
        if (ech.full()) break;
    }
    return ech.nullspace();
}

std::vector<std::vector<Scalar>> radical(const HomogeneousForm& phi) { return radical(polarize(phi)); }

bool is_nondegenerate(const HomogeneousForm& phi) { return radical(phi).empty(); }

HomogeneousForm orthogonal_sum(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.degree != b.degree)
        throw DegreeMismatch("orthogonal sum of forms of degree " + std::to_string(a.degree) +
                             " and " + std::to_string(b.degree));
    Field f = join_fields(a.field, b.field);
    const std::size_t n = a.dim + b.dim;
    return HomogeneousForm(f, a.degree, n, a.body.shifted(n, 0) + b.body.shifted(n, a.dim));
}

SymmetricTensor tensor_product(const SymmetricTensor& a, const SymmetricTensor& b) {
    if (a.degree != b.degree) throw DegreeMismatch("tensor product needs equal degrees");
    SymmetricTensor t{join_fields(a.field, b.field), a.degree, a.dim * b.dim, {}};
    for_each_sorted_tuple(t.dim, t.degree, [&](const Index& idx) {
        Index ia, ib;
        for (auto p : idx) {
            ia.push_back(static_cast<std::uint16_t>(p / b.dim));
            ib.push_back(static_cast<std::uint16_t>(p % b.dim));
        }
        Scalar va = a.at(ia);
        if (va.is_zero()) return;
        t.set(idx, va * b.at(ib));
    });
    return t;
}

AlgebraTensor tensor_product(const AlgebraTensor& a, const AlgebraTensor& b) {
    if (a.degree != b.degree) throw DegreeMismatch("tensor product needs equal degrees");
    if (a.algebra.dim() != b.algebra.dim()) throw DimensionMismatch("tensors over different algebras");
    AlgebraTensor t{a.algebra, a.degree, a.dim * b.dim, {}};
    for_each_sorted_tuple(t.dim, t.degree, [&](const Index& idx) {
        Index ia, ib;
        for (auto p : idx) {
            ia.push_back(static_cast<std::uint16_t>(p / b.dim));
            ib.push_back(static_cast<std::uint16_t>(p % b.dim));
        }
        auto va = a.at(ia);
        if (std::all_of(va.begin(), va.end(), [](const Scalar& x) { return x.is_zero(); })) return;
        t.set(idx, a.algebra.multiply(va, b.at(ib)));
    });
    return t;
}

HomogeneousForm tensor_product(const HomogeneousForm& a, const HomogeneousForm& b) {
    return depolarize(tensor_product(polarize(a), polarize(b)));
}

AlgebraTensor extend_scalars(const SymmetricTensor& theta, const EtaleAlgebra& A) {
    join_fields(theta.field, A.base());
    AlgebraTensor t{A, theta.degree, theta.dim, {}};
    for (const auto& [idx, c] : theta.entries) {
        std::vector<Scalar> v = A.unit();
        for (auto& x : v) x *= c;
        t.set(idx, std::move(v));
    }
    return t;
}

AlgebraTensor extend_scalars(const HomogeneousForm& phi, const EtaleAlgebra& A) {
    return extend_scalars(polarize(phi), A);
}

SymmetricTensor transfer(const EtaleAlgebra& A, const std::vector<Scalar>& s, const AlgebraTensor& gamma) {
    const std::size_t m = A.dim();
    if (s.size() != m) throw DimensionMismatch("functional length");
    if (std::all_of(s.begin(), s.end(), [](const Scalar& x) { return x.is_zero(); }))
        throw ZeroFunctional("transfer needs a nonzero functional");
    if (gamma.algebra.dim() != m) throw DimensionMismatch("tensor lives over a different algebra");
    SymmetricTensor t{A.base(), gamma.degree, gamma.dim * m, {}};
    for_each_sorted_tuple(t.dim, t.degree, [&](const Index& idx) {
        Index js;
        std::vector<Scalar> prod = A.unit();
        for (auto p : idx) {
            js.push_back(static_cast<std::uint16_t>(p / m));
            prod = A.multiply(prod, A.basis(p % m));
        }
        auto g = gamma.at(js);
        auto v = A.multiply(prod, g);
        Scalar acc(0);
        for (std::size_t i = 0; i < m; ++i) acc += s[i] * v[i];
        t.set(idx, acc);
    });
    return t;
}

HomogeneousForm pullback(const HomogeneousForm& phi, const Matrix<Scalar>& P) {
    if (P.rows() != phi.dim) throw DimensionMismatch("pullback matrix must have " + std::to_string(phi.dim) + " rows");
    const std::size_t r = P.cols();
    std::vector<Polynomial> forms(phi.dim, Polynomial(r));
    for (std::size_t i = 0; i < phi.dim; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (!P(i, j).is_zero()) forms[i] += Polynomial::variable(r, j) * P(i, j);
    Field f = phi.field;
    for (const auto& x : P.entries()) f = join_fields(f, x.field());
    return HomogeneousForm(f, phi.degree, r, with_arity(phi.body.compose(forms), r));
}

HomogeneousForm apply_change_of_basis(const HomogeneousForm& phi, const Matrix<Scalar>& f) {
    if (f.rows() != phi.dim || f.cols() != phi.dim)
        throw DimensionMismatch("change of basis must be " + std::to_string(phi.dim) + " x " + std::to_string(phi.dim));
    if (rank(f) != phi.dim) throw Singular("change of basis is not invertible");
    return pullback(phi, f);
}

}  // namespace formforge
