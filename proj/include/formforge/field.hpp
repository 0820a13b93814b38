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

#ifndef FORMFORGE_FIELD_HPP
#define FORMFORGE_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "formforge/rational.hpp"

namespace formforge {

// Simple extension Q[s]/(f) used as a coefficient field. f is monic and
// squarefree; irreducibility is the caller's promise.
class NumberField {
   public:
    static std::shared_ptr<const NumberField> create(std::vector<Rational> minpoly);

    std::size_t degree() const { return minpoly_.size() - 1; }
    // low to high, monic
    const std::vector<Rational>& minpoly() const { return minpoly_; }

    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;
    // Throws ZeroDivisor if a shares a factor with the minimal polynomial.
    std::vector<Rational> inverse(const std::vector<Rational>& a) const;
    std::vector<Rational> reduce(std::vector<Rational> a) const;

    std::string name() const;

   private:
    explicit NumberField(std::vector<Rational> f) : minpoly_(std::move(f)) {}
    std::vector<Rational> minpoly_;
};

// nullptr stands for Q.
using Field = std::shared_ptr<const NumberField>;

bool same_field(const Field& a, const Field& b);
std::size_t field_degree(const Field& f);
std::string field_name(const Field& f);
// The field of a binary operation; throws FieldMismatch.
Field join_fields(const Field& a, const Field& b);

// An element of Q or of a NumberField, stored as power-basis coordinates.
class Scalar {
   public:
    Scalar() : c_(1) {}
    Scalar(int v) : c_{Rational(v)} {}
    Scalar(long v) : c_{Rational(v)} {}
    Scalar(const Rational& q) : c_{q} {}
    Scalar(Field f, std::vector<Rational> coeffs);

    static Scalar generator(const Field& f);
    static Scalar from_rational(const Field& f, const Rational& q);

    const Field& field() const { return f_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Throws InvalidArgument if not in Q.
    const Rational& rational() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Total order for canonical sorting only; no algebraic meaning.
    static int compare(const Scalar& a, const Scalar& b);

    std::string to_string() const;

   private:
    void promote_to(const Field& f);
    Field f_;
    std::vector<Rational> c_;
};

}  // namespace formforge

#endif
