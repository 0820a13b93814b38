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

#include "formforge/field.hpp"

#include "formforge/errors.hpp"
#include "formforge/univariate.hpp"

namespace formforge {

namespace {

using QPoly = Univariate<Rational>;

}  // namespace

std::shared_ptr<const NumberField> NumberField::create(std::vector<Rational> minpoly) {
    while (!minpoly.empty() && minpoly.back() == 0) minpoly.pop_back();
    if (minpoly.size() < 2) throw InvalidArgument("minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1) throw InvalidArgument("minimal polynomial must be monic");
    if (!is_squarefree(QPoly(minpoly))) throw NotSquarefree("minimal polynomial is not squarefree");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(minpoly)));
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> a) const {
    const std::size_t n = degree();
    for (std::size_t i = a.size(); i-- > n;) {
        if (a[i] == 0) continue;
        Rational f = a[i];
        for (std::size_t j = 0; j < n; ++j) a[i - n + j] -= f * minpoly_[j];
        a[i] = 0;
    }
    a.resize(n);
    return a;
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) const {
    std::vector<Rational> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return reduce(std::move(c));
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
    QPoly x(a), f(minpoly_);
    if (x.is_zero()) throw ZeroDivisor("division by zero");
    auto [g, s, t] = xgcd(x, f);
    if (g.degree() > 0) {
        std::vector<std::string> hint;
        for (const auto& c : g.coeffs()) hint.push_back(formforge::to_string(c));
        throw ZeroDivisor("element is a zero divisor; minimal polynomial " + name() +
                              " is reducible",
                          std::move(hint));
    }
    auto c = s.coeffs();
    c.resize(degree());
    return c;
}

std::string NumberField::name() const {
    std::string out = "Q[s]/(";
    bool first = true;
    for (std::size_t i = minpoly_.size(); i-- > 0;) {
        if (minpoly_[i] == 0) continue;
        Rational c = minpoly_[i];
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) c = -c;
        if (c != 1 || i == 0) out += formforge::to_string(c);
        if (i > 0) out += (c != 1 ? "*s" : "s");
        if (i > 1) out += "^" + std::to_string(i);
        first = false;
    }
    return out + ")";
}

bool same_field(const Field& a, const Field& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly() == b->minpoly();
}

std::size_t field_degree(const Field& f) { return f ? f->degree() : 1; }

std::string field_name(const Field& f) { return f ? f->name() : "Q"; }

Field join_fields(const Field& a, const Field& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_field(a, b))
        throw FieldMismatch("cannot combine " + a->name() + " and " + b->name());
    return a;
}

Scalar::Scalar(Field f, std::vector<Rational> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (!f_) {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) throw InvalidArgument("rational scalar with extension coordinates");
        c_.resize(1);
        return;
    }
    if (c_.size() > f_->degree()) c_ = f_->reduce(std::move(c_));
    c_.resize(f_->degree());
}

Scalar Scalar::generator(const Field& f) {
    if (!f) throw InvalidArgument("Q has no generator");
    std::vector<Rational> c(2);
    c[1] = 1;
    return Scalar(f, std::move(c));
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
    return Scalar(f, std::vector<Rational>{q});
}

bool Scalar::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Scalar::is_one() const { return is_rational() && c_[0] == 1; }

const Rational& Scalar::rational() const {
    if (!is_rational()) throw InvalidArgument("scalar " + to_string() + " is not rational");
    return c_[0];
}

void Scalar::promote_to(const Field& f) {
    if (f_ == f) return;
    if (!f_) {
        f_ = f;
        c_.resize(f->degree());
        return;
    }
    if (!f) return;
    if (!same_field(f_, f)) throw FieldMismatch("cannot combine " + f_->name() + " and " + f->name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (!f_ && !o.f_) {
        c_[0] += o.c_[0];
        return *this;
    }
    promote_to(join_fields(f_, o.f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (!f_ && !o.f_) {
        c_[0] -= o.c_[0];
        return *this;
    }
    promote_to(join_fields(f_, o.f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (!f_ && !o.f_) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.is_rational()) {
        Field f = join_fields(f_, o.f_);
        for (auto& c : c_) c *= o.c_[0];
        promote_to(f);
        return *this;
    }
    if (is_rational()) {
        Rational q = c_[0];
        f_ = join_fields(f_, o.f_);
        c_ = o.c_;
        for (auto& c : c_) c *= q;
        return *this;
    }
    Field f = join_fields(f_, o.f_);
    c_ = f->multiply(c_, o.c_);
    f_ = f;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroDivisor("division by zero");
    if (is_rational()) {
        Scalar r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    return Scalar(f_, f_->inverse(c_));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r = Scalar::from_rational(f_, 1), b = *this;
    if (!f_) r = Scalar(1);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.f_ || !b.f_ || a.f_ == b.f_) {
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& x = i < a.c_.size() ? a.c_[i] : b.c_[0] - b.c_[0];
            const Rational& y = i < b.c_.size() ? b.c_[i] : a.c_[0] - a.c_[0];
            if (x != y) return false;
        }
        return true;
    }
    join_fields(a.f_, b.f_);
    return a.c_ == b.c_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = n; i-- > 0;) {
        Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
        Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
        int c = cmp(x, y);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Scalar::to_string() const {
    if (is_rational()) return formforge::to_string(c_[0]);
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) c = -c;
        if (i == 0) out += formforge::to_string(c);
        else {
            if (c != 1) out += formforge::to_string(c) + "*";
            out += "s";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return "(" + out + ")";
}

}  // namespace formforge
