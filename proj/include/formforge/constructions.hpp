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

#ifndef FORMFORGE_CONSTRUCTIONS_HPP
#define FORMFORGE_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formforge/witness.hpp"

namespace formforge {

// Matrices S(c) with phi(S(c) y) = c phi(y) for every c.
using SimilarityFamily = std::function<Matrix<RationalFunction>(const RationalFunction&)>;

struct ConstructedForm {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    HomogeneousForm form;
    std::optional<ScaledWitness> witness;
    std::string witness_role;  // e.g. "strong-mult", "exponent-2"
    std::optional<BilinearMap> composition;
    std::optional<AlgebraPresentation> algebra;  // carries the Jordan product
    std::optional<std::vector<Polynomial>> sharp;
    SimilarityFamily similarity;  // may be empty
};

ConstructedForm diagonal(const Field& field, unsigned degree, const std::vector<Scalar>& a);
// x_1^{m_1} ... x_r^{m_r}
ConstructedForm monomial(const std::vector<unsigned>& exponents);
// phi_1(u_1)^{s_1} ... phi_r(u_r)^{s_r} on disjoint variable blocks.
ConstructedForm product_form(const std::vector<std::pair<HomogeneousForm, unsigned>>& factors);

// n_{A/K}(phi0(v)) for phi0 with coefficients in the base field, computed as
// the determinant of the regular representation. Variable u_{j,i} (the a_i
// coordinate of v_j) has index j * dim(A) + i.
ConstructedForm norm_compose(const EtaleAlgebra& A, const HomogeneousForm& phi0);
// Same form as the product of the m conjugates sigma^k(phi0(v)) for a Kummer
// algebra K[t]/(t^m - c), where sigma(t) = zeta t and zeta is a primitive
// m-th root of unity in K.
HomogeneousForm norm_compose_conjugates(const EtaleAlgebra& A, const HomogeneousForm& phi0, const Scalar& zeta);

// Determinant of a generic d x d matrix, 2 <= d <= 4, entry (i, j) at i * d + j.
ConstructedForm det_norm(std::size_t d);
// Norm of the Cayley-Dickson algebra with 1 to 3 parameters: binary(a) is
// x^2 - a y^2, quaternion(a, b), octonion(a, b, c).
ConstructedForm composition_algebra_norm(const std::vector<Scalar>& params);
// x^2 - y^2 with its composition.
ConstructedForm hyperbolic_plane();
// u^3 + a v^3 + a^2 w^3 - 3a uvw, the norm of K[t]/(t^3 - a).
ConstructedForm tits_cubic(const Scalar& a);
// Multiplicativity of the Tits cubic norm with a as a seventh variable.
VerificationReport verify_tits_cubic_generic(const VerifyOptions& opts);
ConstructedForm split_albert_norm();

// Pairing T: J x J' -> k with T(j, j') = j^T T j', cubic forms N on J and N'
// on J'. j# in J' and j'# in J are the gradients pulled back through T.
struct AdmissibleTriple {
    Field field;
    Matrix<Scalar> T;
    HomogeneousForm N, Np;
    std::vector<Polynomial> sharp;    // dim J' polynomials in dim J variables
    std::vector<Polynomial> sharp_p;  // dim J polynomials in dim J' variables
    std::size_t dim_j() const { return N.dim; }
    std::size_t dim_jp() const { return Np.dim; }
    // j x i = (j + i)# - j# - i#, and likewise on J'.
    template <class R>
    std::vector<R> cross(const std::vector<R>& j, const std::vector<R>& i) const;
    template <class R>
    std::vector<R> cross_p(const std::vector<R>& j, const std::vector<R>& i) const;
    template <class R>
    R pairing(const std::vector<R>& j, const std::vector<R>& jp) const {
        R s{};
        for (std::size_t a = 0; a < T.rows(); ++a)
            for (std::size_t b = 0; b < T.cols(); ++b)
                if (!T(a, b).is_zero()) s += j[a] * jp[b] * T(a, b);
        return s;
    }
};

// Sharp maps from T and the cubic forms. Throws DegeneratePairing.
AdmissibleTriple make_admissible_triple(const Matrix<Scalar>& T, const HomogeneousForm& N, const HomogeneousForm& Np);
// (zeta T_J, zeta N_J, zeta^2 N_J) from a cubic-norm algebra with trace.
AdmissibleTriple jordan_triple_from_degree3(const AlgebraPresentation& J, const Scalar& zeta);
// (j#)# = N(j) j and (j'#)# = N'(j') j', symbolically.
bool adjoint_identities_hold(const AdmissibleTriple& t);

// 4 a N(j) + 4 b N'(j') - 4 T(j'#, j#) + (a b - T(j, j'))^2 with coordinates
// (a, j, j', b). Throws AdjointIdentityFailure.
ConstructedForm structurable_quartic(const AdmissibleTriple& t);
// The quartic again, from the algebra of 2 x 2 arrays [a j; j' b] with the
// swap involution and skew element s0 = diag(1, -1), as
// (1/(12 mu)) chi(s0 x, {x, s0 x, x}).
VerificationReport structurable_cross_check(const AdmissibleTriple& t, const VerifyOptions& opts);

// Q(b1) + mu^2 Q(b2) + (mu/2) t(U_{b1} b2, b2) - (mu/4) t(b1, b2)^2 on
// (b1, b2), with t the bilinear trace form of B.
ConstructedForm cayley_dickson_quartic(const AlgebraPresentation& B, const Scalar& mu);
// b -> -b + t(b)/2 as a matrix on B.
Matrix<Scalar> quartic_theta(const AlgebraPresentation& B);

// phi1^m; a witness (c, M) of phi1 becomes (c^m, M).
ConstructedForm power_form(const ConstructedForm& phi1, unsigned m);
// a_1 phi + ... + a_r phi with the block witness diag(S(Phi(X)), ...).
// Throws MissingWitness if phi has no similarity family.
ConstructedForm scaled_block_sum(const ConstructedForm& phi, const std::vector<Scalar>& a);

// Every built-in construction with its default parameters.
std::vector<ConstructedForm> catalog();

inline Scalar eval_poly(const Polynomial& p, const std::vector<Scalar>& x) { return p.evaluate(x); }
inline Polynomial eval_poly(const Polynomial& p, const std::vector<Polynomial>& x) { return p.compose(x); }

template <class R>
std::vector<R> AdmissibleTriple::cross(const std::vector<R>& j, const std::vector<R>& i) const {
    std::vector<R> s(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) s[k] = j[k] + i[k];
    auto ev = [&](const std::vector<R>& x) {
        std::vector<R> out;
        for (const auto& p : sharp) out.push_back(eval_poly(p, x));
        return out;
    };
    auto a = ev(s), b = ev(j), c = ev(i);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] - b[k] - c[k];
    return a;
}

template <class R>
std::vector<R> AdmissibleTriple::cross_p(const std::vector<R>& j, const std::vector<R>& i) const {
    std::vector<R> s(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) s[k] = j[k] + i[k];
    auto ev = [&](const std::vector<R>& x) {
        std::vector<R> out;
        for (const auto& p : sharp_p) out.push_back(eval_poly(p, x));
        return out;
    };
    auto a = ev(s), b = ev(j), c = ev(i);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] - b[k] - c[k];
    return a;
}

}  // namespace formforge

#endif
