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

#ifndef FORMFORGE_POLYNOMIAL_HPP
#define FORMFORGE_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formforge/field.hpp"
#include "formforge/matrix.hpp"

namespace formforge {

using Monomial = std::vector<std::uint16_t>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto e : m) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

unsigned monomial_degree(const Monomial& m);
// Graded lex: negative if a < b. x1 > x2 > ... within a degree.
int grlex_compare(const Monomial& a, const Monomial& b);

// Sparse polynomial with Scalar coefficients. Terms are kept sorted in
// decreasing graded-lex order with no zero coefficients. A polynomial with
// zero variables is a constant and combines with polynomials of any arity.
class Polynomial {
   public:
    using Term = std::pair<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : n_(nvars) {}
    Polynomial(const Scalar& c);
    Polynomial(int c) : Polynomial(Scalar(c)) {}

    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(std::size_t nvars, Monomial m, const Scalar& c);
    // Merges duplicate monomials and drops zeros.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    int total_degree() const;
    int degree_in(std::size_t var) const;
    std::optional<unsigned> homogeneous_degree() const;
    Scalar coeff(const Monomial& m) const;
    const Term& leading_term() const { return t_.front(); }
    Field field() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Scalar& s);
    friend Polynomial operator*(const Scalar& s, const Polynomial& a) { return a * s; }
    Polynomial operator-() const;
    Polynomial pow(unsigned e) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Scalar evaluate(const std::vector<Scalar>& point) const;
    // Substitutes subs[i] for variable i; all subs share one arity.
    Polynomial compose(const std::vector<Polynomial>& subs) const;
    // Variable i becomes variable where[i] of a polynomial in new_nvars variables.
    Polynomial embed(std::size_t new_nvars, const std::vector<std::size_t>& where) const;
    // Shifts variables up by `offset` inside new_nvars variables.
    Polynomial shifted(std::size_t new_nvars, std::size_t offset) const;
    Polynomial derivative(std::size_t var) const;
    Polynomial homogeneous_part(unsigned k) const;
    // Partial evaluation: variables in `vars` set to `values`, arity kept.
    Polynomial specialize(const std::vector<std::size_t>& vars,
                          const std::vector<Scalar>& values) const;

    std::string to_string() const;
    // Canonical total order (term by term); for sorting only.
    static int compare(const Polynomial& a, const Polynomial& b);

   private:
    friend Polynomial mul_impl(const Polynomial&, const Polynomial&);
    void promote(std::size_t nvars);
    std::size_t n_ = 0;
    std::vector<Term> t_;
};

// Quotient p / q; throws NotDivisible if q does not divide p.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);

// num / den with den != 0. Reduction is lazy: the denominator is made to
// lead with 1, common monomial content is cancelled and exact quotients
// are taken when they exist. There is no multivariate gcd.
class RationalFunction {
   public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(p.nvars(), 1)) {}
    RationalFunction(const Scalar& c) : num_(c), den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    std::size_t nvars() const { return std::max(num_.nvars(), den_.nvars()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction pow(int e) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    // Throws ZeroDivisor when the denominator vanishes at the point.
    Scalar evaluate(const std::vector<Scalar>& point) const;
    std::string to_string() const;

   private:
    void normalize();
    Polynomial num_, den_;
};

// For p homogeneous of degree d in n variables Y and an n x n matrix M over
// k(X) with m = arity of X, returns (q, D): D is the product of the distinct
// non-constant denominators of M (a polynomial in X) and q = D^d p(M Y) in
// the m + n variables (X, Y).
std::pair<Polynomial, Polynomial> substitute_linear(const Polynomial& p,
                                                    const Matrix<RationalFunction>& M,
                                                    std::size_t x_vars);

// Returns (c, g) with p = c g^d and g leading with coefficient 1, if any.
std::optional<std::pair<Scalar, Polynomial>> is_dth_power(const Polynomial& p, unsigned d);

}  // namespace formforge

#endif
