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

#include "formforge/etale.hpp"

#include "formforge/errors.hpp"
#include "formforge/univariate.hpp"

namespace formforge {

namespace {

using KPoly = Univariate<Scalar>;

}  // namespace

EtaleAlgebra EtaleAlgebra::extend(const Field& base, const std::vector<Scalar>& minpoly) {
    KPoly f(minpoly);
    if (f.degree() < 1) throw InvalidArgument("defining polynomial must have degree >= 1");
    if (!f.lead().is_one()) throw InvalidArgument("defining polynomial must be monic");
    for (const auto& c : minpoly) join_fields(base, c.field());
    if (!is_squarefree(f)) throw NotSquarefree("defining polynomial is not squarefree");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    EtaleAlgebra A;
    A.base_ = base;
    A.dim_ = m;
    A.minpoly_ = f.coeffs();
    // t^k reduced for k < 2m - 1
    std::vector<std::vector<Scalar>> pw;
    std::vector<Scalar> cur(m);
    cur[0] = Scalar(1);
    for (std::size_t k = 0; k + 1 < 2 * m; ++k) {
        pw.push_back(cur);
        std::vector<Scalar> next(m);
        for (std::size_t i = 0; i + 1 < m; ++i) next[i + 1] = cur[i];
        const Scalar& top = cur[m - 1];
        if (!top.is_zero())
            for (std::size_t i = 0; i < m; ++i) next[i] -= top * f.coeff(i);
        cur = std::move(next);
    }
    A.table_.assign(m, std::vector<std::vector<Scalar>>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) A.table_[i][j] = pw[i + j];
    A.unit_ = pw[0];
    return A;
}

EtaleAlgebra EtaleAlgebra::split(const Field& base, std::size_t m) {
    if (m == 0) throw InvalidArgument("split algebra needs dimension >= 1");
    EtaleAlgebra A;
    A.base_ = base;
    A.dim_ = m;
    A.table_.assign(m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
    for (std::size_t i = 0; i < m; ++i) A.table_[i][i][i] = Scalar(1);
    A.unit_.assign(m, Scalar(1));
    return A;
}

EtaleAlgebra EtaleAlgebra::from_structure(const Field& base,
                                          std::vector<std::vector<std::vector<Scalar>>> table,
                                          std::vector<Scalar> unit) {
    const std::size_t m = unit.size();
    if (m == 0 || table.size() != m) throw DimensionMismatch("structure constants shape");
    for (const auto& row : table) {
        if (row.size() != m) throw DimensionMismatch("structure constants shape");
        for (const auto& v : row)
            if (v.size() != m) throw DimensionMismatch("structure constants shape");
    }
    EtaleAlgebra A;
    A.base_ = base;
    A.dim_ = m;
    A.table_ = std::move(table);
    A.unit_ = std::move(unit);
    for (std::size_t i = 0; i < m; ++i) {
        auto ei = A.basis(i);
        if (A.multiply(A.unit_, ei) != ei) throw InvalidArgument("unit does not act as identity");
        for (std::size_t j = 0; j < m; ++j) {
            auto ej = A.basis(j);
            if (A.table_[i][j] != A.table_[j][i]) throw InvalidArgument("algebra is not commutative");
            for (std::size_t k = 0; k < m; ++k) {
                auto ek = A.basis(k);
                if (A.multiply(A.multiply(ei, ej), ek) != A.multiply(ei, A.multiply(ej, ek)))
                    throw InvalidArgument("algebra is not associative");
            }
        }
    }
    return A;
}

std::vector<Scalar> EtaleAlgebra::basis(std::size_t i) const {
    std::vector<Scalar> e(dim_);
    e.at(i) = Scalar(1);
    return e;
}

void EtaleAlgebra::check(std::size_t n) const {
    if (n != dim_) throw DimensionMismatch("element has " + std::to_string(n) + " coordinates, algebra has dimension " + std::to_string(dim_));
}

Scalar EtaleAlgebra::norm(const std::vector<Scalar>& x) const { return determinant(regular(x)); }

Scalar EtaleAlgebra::trace(const std::vector<Scalar>& x) const { return trace_generic(x); }

std::vector<Scalar> EtaleAlgebra::add(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    check(x.size());
    check(y.size());
    std::vector<Scalar> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = x[i] + y[i];
    return out;
}

std::vector<Scalar> EtaleAlgebra::inverse(const std::vector<Scalar>& x) const {
    auto sol = solve(regular(x), unit_);
    if (sol && rank(regular(x)) == dim_) return *sol;
    std::vector<std::string> hint;
    if (minpoly_) {
        KPoly g = gcd(KPoly(*minpoly_), KPoly(x));
        for (const auto& c : g.coeffs()) hint.push_back(c.to_string());
    }
    throw ZeroDivisor("element is not invertible in " + describe(), std::move(hint));
}

std::vector<Scalar> EtaleAlgebra::trace_functional() const {
    std::vector<Scalar> s(dim_);
    for (std::size_t i = 0; i < dim_; ++i) s[i] = trace(basis(i));
    return s;
}

std::string EtaleAlgebra::describe() const {
    if (!minpoly_) return "split algebra of dimension " + std::to_string(dim_) + " over " + field_name(base_);
    std::string f;
    for (std::size_t i = minpoly_->size(); i-- > 0;) {
        if ((*minpoly_)[i].is_zero()) continue;
        if (!f.empty()) f += " + ";
        f += (*minpoly_)[i].to_string();
        if (i > 0) f += "*t^" + std::to_string(i);
    }
    return field_name(base_) + "[t]/(" + f + ")";
}

}  // namespace formforge
