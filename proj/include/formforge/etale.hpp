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

#ifndef FORMFORGE_ETALE_HPP
#define FORMFORGE_ETALE_HPP

#include <optional>
#include <string>
#include <vector>

#include "formforge/field.hpp"
#include "formforge/matrix.hpp"

namespace formforge {

// Finite-dimensional commutative associative unital algebra over a
// coefficient field, given by structure constants. Elements are coordinate
// vectors in the stored basis.
class EtaleAlgebra {
   public:
    // K[t]/(f) with power basis; f monic over K, squarefree (NotSquarefree).
    static EtaleAlgebra extend(const Field& base, const std::vector<Scalar>& minpoly);
    // K x ... x K (m copies) with coordinatewise product.
    static EtaleAlgebra split(const Field& base, std::size_t m);
    // table[i][j] = coordinates of a_i a_j. Checked for commutativity,
    // associativity and the unit on basis triples.
    static EtaleAlgebra from_structure(const Field& base,
                                       std::vector<std::vector<std::vector<Scalar>>> table,
                                       std::vector<Scalar> unit);

    const Field& base() const { return base_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::optional<std::vector<Scalar>>& minpoly() const { return minpoly_; }
    const std::vector<Scalar>& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

    std::vector<Scalar> basis(std::size_t i) const;

    template <class R>
    std::vector<R> multiply(const std::vector<R>& x, const std::vector<R>& y) const {
        check(x.size());
        check(y.size());
        std::vector<R> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == R{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == R{}) continue;
                R xy = x[i] * y[j];
                const auto& c = table_[i][j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c[k].is_zero()) out[k] += xy * c[k];
            }
        }
        return out;
    }

    // Left multiplication by x: column j holds x * a_j.
    template <class R>
    Matrix<R> regular(const std::vector<R>& x) const {
        check(x.size());
        Matrix<R> m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == R{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const auto& c = table_[i][j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c[k].is_zero()) m(k, j) += x[i] * c[k];
            }
        }
        return m;
    }

    // Norm as the determinant of the regular representation; division free,
    // so it works for polynomial coordinates.
    template <class R>
    R norm_generic(const std::vector<R>& x) const {
        return determinant_expand(regular(x));
    }
    template <class R>
    R trace_generic(const std::vector<R>& x) const {
        Matrix<R> m = regular(x);
        R t{};
        for (std::size_t i = 0; i < dim_; ++i) t += m(i, i);
        return t;
    }

    Scalar norm(const std::vector<Scalar>& x) const;
    Scalar trace(const std::vector<Scalar>& x) const;
    std::vector<Scalar> add(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    // Throws ZeroDivisor; for monogenic algebras the hint is gcd(f, x(t)).
    std::vector<Scalar> inverse(const std::vector<Scalar>& x) const;
    // Coordinates of the trace functional: s_i = tr(a_i).
    std::vector<Scalar> trace_functional() const;

    std::string describe() const;

   private:
    void check(std::size_t n) const;
    Field base_;
    std::size_t dim_ = 0;
    std::vector<std::vector<std::vector<Scalar>>> table_;
    std::vector<Scalar> unit_;
    std::optional<std::vector<Scalar>> minpoly_;
};

}  // namespace formforge

#endif
