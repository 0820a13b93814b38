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

#ifndef FORMFORGE_WITNESS_HPP
#define FORMFORGE_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "formforge/algebra.hpp"
#include "formforge/decompose.hpp"
#include "formforge/identity.hpp"

namespace formforge {

// c(X) phi(Y) = phi(M(X) Y) with X in x_vars variables.
struct ScaledWitness {
    std::size_t x_vars = 0;
    RationalFunction c;
    Matrix<RationalFunction> M;
};

// z_l(x, y) = x^T Z_l y, one matrix per output coordinate.
struct BilinearMap {
    std::vector<Matrix<Scalar>> z;
    std::size_t dim() const { return z.size(); }
    template <class R>
    std::vector<R> apply(const std::vector<R>& x, const std::vector<R>& y) const {
        std::vector<R> out(z.size());
        for (std::size_t l = 0; l < z.size(); ++l)
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j)
                    if (!z[l](i, j).is_zero()) out[l] += x[i] * y[j] * z[l](i, j);
        return out;
    }
};

BilinearMap bilinear_from_algebra(const AlgebraPresentation& A);
// Structure matrices with the factors swapped: z(x, y) = y x.
BilinearMap opposite(const BilinearMap& z);

// phi(X) as a rational function in dim variables.
RationalFunction generic_value(const HomogeneousForm& phi);

// c = phi(X) and M(X)_{lj} = sum_i x_i Z_l[i][j], so that M(X) y = z(X, y).
ScaledWitness witness_from_composition(const HomogeneousForm& phi, const BilinearMap& z);

// num(c) D^d phi(Y) == den(c) D^d phi(M Y) in k[X, Y]. Throws
// DimensionMismatch, SingularWitness.
VerificationReport verify_scaled_witness(const HomogeneousForm& phi, const ScaledWitness& w,
                                         const VerifyOptions& opts);

VerificationReport verify_strong_mult(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                      const VerifyOptions& opts);
VerificationReport verify_strong_jordan(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                        const VerifyOptions& opts);
VerificationReport verify_exponent(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                   unsigned s, const VerifyOptions& opts);
VerificationReport verify_similarity(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                     const Scalar& a, const VerifyOptions& opts);
VerificationReport verify_mu_twist(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                   const Scalar& mu, unsigned s, const VerifyOptions& opts);

// phi(x) phi(y) == phi(z(x, y)) in 2n variables.
VerificationReport verify_composition(const HomogeneousForm& phi, const BilinearMap& z,
                                      const VerifyOptions& opts);
// phi(1) == 1 (UnitMismatch otherwise) and phi({x y x}) == phi(x)^2 phi(y).
VerificationReport verify_jordan_composition(const HomogeneousForm& phi, const AlgebraPresentation& A,
                                             const VerifyOptions& opts);

enum class Decision { StronglyMultiplicative, NotStronglyMultiplicative };
struct DecisionReport {
    Decision decision;
    std::string reason;
};

// Diagonal form sum a_i x_i^d, d >= 3.
DecisionReport diagonal_strong_mult_decision(const std::vector<Rational>& a, unsigned d);
// Diagonal cubic and phi(X)^2 in place of phi(X).
DecisionReport diagonal_jordan_cubic_decision(const std::vector<Rational>& a);

struct ObstructionReport {
    bool obstructed = false;
    std::vector<std::string> reasons;
    std::vector<std::size_t> dimensions;
    std::vector<std::string> constraints;
    std::vector<std::string> power_tests;
    Decomposition decomposition;
};

ObstructionReport krull_schmidt_obstruction(const HomogeneousForm& phi);

// eta with f = eta g and eta^m = 1, if any.
std::optional<Scalar> root_of_unity_ratio(const Polynomial& f, const Polynomial& g, unsigned m);

// From a strong-mult witness of phi0 and mu, the form mu^(d-1) phi0 with a
// witness for mu phi(X) phi = phi(M' Y). Throws WitnessInvalid.
std::pair<HomogeneousForm, ScaledWitness> twist_witness(const HomogeneousForm& phi0, const ScaledWitness& w,
                                                        const Scalar& mu, const VerifyOptions& opts);
// A witness with c = lambda^d c' becomes one for c' via M / lambda, when
// mu = lambda^d has a rational d-th root.
std::optional<ScaledWitness> absorb_dth_power(const ScaledWitness& w, const Scalar& mu, unsigned d);

struct ExponentReduction {
    unsigned e = 0;
    bool implies_strong = false;
};
ExponentReduction reduce_exponent(unsigned d, unsigned s);
bool exponent_implies_strong(unsigned d, unsigned s);

// Exponent-s witness M_s to exponent-gcd(s, d) witness phi(X)^(-v) M_s^u
// where gcd(s, d) = u s - v d.
ScaledWitness reduce_exponent_witness(const HomogeneousForm& phi, const Matrix<RationalFunction>& Ms, unsigned s);
// Odd degree d = 2r + 1: exponent-2 witness to phi(X)^(-1) M_2^(r+1).
ScaledWitness jordan_to_strong_witness(const HomogeneousForm& phi, const Matrix<RationalFunction>& M2);

}  // namespace formforge

#endif
