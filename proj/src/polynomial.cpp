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

#include "formforge/polynomial.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "formforge/errors.hpp"

namespace formforge {

namespace {

using TermMap = std::unordered_map<Monomial, Scalar, MonomialHash>;

void sort_terms(std::vector<Polynomial::Term>& t) {
    std::sort(t.begin(), t.end(),
              [](const Polynomial::Term& a, const Polynomial::Term& b) {
                  return grlex_compare(a.first, b.first) > 0;
              });
}

std::vector<Polynomial::Term> drain(TermMap& acc) {
    std::vector<Polynomial::Term> t;
    t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) t.emplace_back(m, std::move(c));
    sort_terms(t);
    return t;
}

}  // namespace

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Polynomial::Polynomial(const Scalar& c) {
    if (!c.is_zero()) t_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.t_.emplace_back(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionMismatch("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    return monomial(nvars, std::move(m), Scalar(1));
}

Polynomial Polynomial::monomial(std::size_t nvars, Monomial m, const Scalar& c) {
    if (m.size() != nvars) throw DimensionMismatch("monomial length");
    Polynomial p(nvars);
    if (!c.is_zero()) p.t_.emplace_back(std::move(m), c);
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.first.size() != nvars) throw DimensionMismatch("monomial length");
    sort_terms(terms);
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first) p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && p.t_.back().second.is_zero()) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().second.is_zero()) p.t_.pop_back();
    return p;
}

void Polynomial::promote(std::size_t nvars) {
    if (n_ == nvars) return;
    if (n_ != 0)
        throw DimensionMismatch("polynomials in " + std::to_string(n_) + " and " +
                                std::to_string(nvars) + " variables");
    for (auto& t : t_) t.first.assign(nvars, 0);
    n_ = nvars;
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && monomial_degree(t_[0].first) == 0);
}

Scalar Polynomial::constant_term() const {
    if (!t_.empty() && monomial_degree(t_.back().first) == 0) return t_.back().second;
    return Scalar(0);
}

int Polynomial::total_degree() const {
    return t_.empty() ? -1 : static_cast<int>(monomial_degree(t_.front().first));
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first[var]));
    return d;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    unsigned d = monomial_degree(t_.front().first);
    if (monomial_degree(t_.back().first) != d) return std::nullopt;
    return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& x) {
        return grlex_compare(t.first, x) > 0;
    });
    if (it != t_.end() && it->first == m) return it->second;
    return Scalar(0);
}

Field Polynomial::field() const {
    Field f;
    for (const auto& t : t_) f = join_fields(f, t.second.field());
    return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.t_.empty()) {
        if (n_ == 0) promote(o.n_);
        return *this;
    }
    if (n_ != o.n_) {
        if (o.n_ == 0) {
            Polynomial c = o;
            c.promote(n_);
            return *this += c;
        }
        promote(o.n_);
    }
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.begin(), ae = t_.end();
    auto b = o.t_.begin(), be = o.t_.end();
    while (a != ae || b != be) {
        int c = a == ae ? -1 : b == be ? 1 : grlex_compare(a->first, b->first);
        if (c > 0) out.push_back(std::move(*a++));
        else if (c < 0) out.push_back(*b++);
        else {
            Scalar s = a->second + b->second;
            if (!s.is_zero()) out.emplace_back(std::move(a->first), std::move(s));
            ++a;
            ++b;
        }
    }
    t_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

Polynomial operator*(const Polynomial& a, const Scalar& s) {
    Polynomial r(a.n_);
    if (s.is_zero()) return r;
    r.t_.reserve(a.t_.size());
    for (const auto& t : a.t_) {
        Scalar c = t.second * s;
        if (!c.is_zero()) r.t_.emplace_back(t.first, std::move(c));
    }
    return r;
}

Polynomial mul_impl(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::max(a.n_, b.n_);
    if (a.t_.empty() || b.t_.empty()) return Polynomial(n);
    if (a.n_ != b.n_ && a.n_ != 0 && b.n_ != 0)
        throw DimensionMismatch("polynomials in " + std::to_string(a.n_) + " and " +
                                std::to_string(b.n_) + " variables");
    if (a.n_ == 0) return b * a.t_[0].second;
    if (b.n_ == 0) return a * b.t_[0].second;
    const Polynomial& big = a.t_.size() >= b.t_.size() ? a : b;
    const Polynomial& small = a.t_.size() >= b.t_.size() ? b : a;
    if (small.t_.size() == 1) {
        // monomial multiples keep the order
        Polynomial r(n);
        r.t_.reserve(big.t_.size());
        const auto& [sm, sc] = small.t_[0];
        for (const auto& [m, c] : big.t_) {
            Monomial mm = m;
            for (std::size_t i = 0; i < n; ++i) mm[i] = static_cast<std::uint16_t>(mm[i] + sm[i]);
            r.t_.emplace_back(std::move(mm), c * sc);
        }
        return r;
    }
    TermMap acc;
    acc.reserve(std::min<std::size_t>(a.t_.size() * b.t_.size(), 1u << 22));
    Monomial mm(n);
    for (const auto& [ma, ca] : big.t_)
        for (const auto& [mb, cb] : small.t_) {
            for (std::size_t i = 0; i < n; ++i) mm[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            auto it = acc.find(mm);
            if (it == acc.end()) acc.emplace(mm, ca * cb);
            else it->second += ca * cb;
        }
    Polynomial r(n);
    r.t_ = drain(acc);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul_impl(a, b); }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = mul_impl(*this, o); }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(n_, 1);
    if (e == 0) return r;
    r = *this;
    for (unsigned i = 1; i < e; ++i) r = r * *this;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    if (a.t_.empty()) return true;
    if (a.n_ != b.n_) {
        if (a.n_ != 0 && b.n_ != 0) return false;
        Polynomial x = a, y = b;
        std::size_t n = std::max(a.n_, b.n_);
        x.promote(n);
        y.promote(n);
        return x == y;
    }
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
    return true;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (n_ != 0 && point.size() != n_) throw DimensionMismatch("evaluation point length");
    std::vector<std::vector<Scalar>> pw(n_);
    Scalar acc(0);
    for (const auto& [m, c] : t_) {
        Scalar v = c;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!m[i]) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(Scalar(1));
            while (p.size() <= m[i]) p.push_back(p.back() * point[i]);
            v *= p[m[i]];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
    if (subs.size() != n_) throw DimensionMismatch("composition needs one polynomial per variable");
    std::size_t m = 0;
    for (const auto& s : subs) m = std::max(m, s.n_);
    std::vector<std::vector<Polynomial>> pw(n_);
    TermMap acc;
    for (const auto& [mono, c] : t_) {
        Polynomial prod = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < n_ && !prod.is_zero(); ++i) {
            if (!mono[i]) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(Polynomial::constant(m, 1));
            while (p.size() <= mono[i]) p.push_back(p.back() * subs[i]);
            prod = prod * p[mono[i]];
        }
        for (auto& [mm, cc] : prod.t_) {
            auto it = acc.find(mm);
            if (it == acc.end()) acc.emplace(std::move(mm), std::move(cc));
            else it->second += cc;
        }
    }
    Polynomial r(m);
    r.t_ = drain(acc);
    return r;
}

Polynomial Polynomial::embed(std::size_t new_nvars, const std::vector<std::size_t>& where) const {
    if (where.size() != n_) throw DimensionMismatch("embedding map length");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        Monomial mm(new_nvars, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (where[i] >= new_nvars) throw DimensionMismatch("embedding target out of range");
            mm[where[i]] = static_cast<std::uint16_t>(mm[where[i]] + m[i]);
        }
        out.emplace_back(std::move(mm), c);
    }
    return from_terms(new_nvars, std::move(out));
}

Polynomial Polynomial::shifted(std::size_t new_nvars, std::size_t offset) const {
    if (offset + n_ > new_nvars) throw DimensionMismatch("shift out of range");
    Polynomial r(new_nvars);
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        Monomial mm(new_nvars, 0);
        std::copy(m.begin(), m.end(), mm.begin() + static_cast<std::ptrdiff_t>(offset));
        r.t_.emplace_back(std::move(mm), c);
    }
    // padding with zeros keeps the relative order
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= n_) throw DimensionMismatch("derivative variable out of range");
    std::vector<Term> out;
    for (const auto& [m, c] : t_) {
        if (!m[var]) continue;
        Monomial mm = m;
        --mm[var];
        out.emplace_back(std::move(mm), c * Scalar(static_cast<long>(m[var])));
    }
    Polynomial r(n_);
    sort_terms(out);
    r.t_ = std::move(out);
    return r;
}

Polynomial Polynomial::homogeneous_part(unsigned k) const {
    Polynomial r(n_);
    for (const auto& t : t_)
        if (monomial_degree(t.first) == k) r.t_.push_back(t);
    return r;
}

Polynomial Polynomial::specialize(const std::vector<std::size_t>& vars,
                                  const std::vector<Scalar>& values) const {
    if (vars.size() != values.size()) throw DimensionMismatch("specialization lengths");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        Monomial mm = m;
        Scalar v = c;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (mm[vars[k]]) v *= values[k].pow(mm[vars[k]]);
            mm[vars[k]] = 0;
        }
        if (!v.is_zero()) out.emplace_back(std::move(mm), std::move(v));
    }
    return from_terms(n_, std::move(out));
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coeff;
        bool neg = false;
        if (c.is_rational()) {
            Rational q = c.rational();
            if (q < 0) {
                neg = true;
                q = -q;
            }
            if (q != 1 || mono.empty()) coeff = formforge::to_string(q);
        } else {
            coeff = c.to_string();
        }
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += coeff;
        if (!coeff.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.t_.size(), b.t_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = grlex_compare(a.t_[i].first, b.t_[i].first);
        if (c) return c;
        c = Scalar::compare(a.t_[i].second, b.t_[i].second);
        if (c) return c;
    }
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
    return 0;
}

std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw ZeroDivisor("polynomial division by zero");
    std::size_t n = std::max(p.nvars(), q.nvars());
    if (p.is_zero()) return Polynomial(n);
    if (q.is_constant()) return p * q.leading_term().second.inverse();
    if (p.total_degree() < q.total_degree()) return std::nullopt;
    Polynomial r = p, qq = q;
    if (r.nvars() != n) r = r + Polynomial(n);
    if (qq.nvars() != n) qq = qq + Polynomial(n);
    const auto& [lm, lc] = qq.leading_term();
    Scalar lc_inv = lc.inverse();
    std::vector<Polynomial::Term> quot;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rm[i] < lm[i]) return std::nullopt;
            m[i] = static_cast<std::uint16_t>(rm[i] - lm[i]);
        }
        Scalar c = rc * lc_inv;
        Polynomial t = Polynomial::monomial(n, m, c);
        quot.emplace_back(std::move(m), std::move(c));
        r -= t * qq;
    }
    return Polynomial::from_terms(n, std::move(quot));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw NotDivisible("(" + q.to_string() + ") does not divide (" + p.to_string() + ")");
    return *r;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw ZeroDivisor("rational function with zero denominator");
    std::size_t n = std::max(num_.nvars(), den_.nvars());
    if (num_.nvars() != n) num_ = num_ + Polynomial(n);
    if (den_.nvars() != n) den_ = den_ + Polynomial(n);
    if (num_.is_zero()) {
        den_ = Polynomial::constant(n, 1);
        return;
    }
    Scalar lc = den_.leading_term().second;
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    if (den_.is_constant()) return;
    Monomial content(n, UINT16_MAX);
    for (const auto* p : {&num_, &den_})
        for (const auto& t : p->terms())
            for (std::size_t i = 0; i < n; ++i) content[i] = std::min(content[i], t.first[i]);
    if (monomial_degree(content) > 0) {
        auto strip = [&](const Polynomial& p) {
            std::vector<Polynomial::Term> out;
            for (const auto& [m, c] : p.terms()) {
                Monomial mm = m;
                for (std::size_t i = 0; i < n; ++i) mm[i] = static_cast<std::uint16_t>(mm[i] - content[i]);
                out.emplace_back(std::move(mm), c);
            }
            return Polynomial::from_terms(n, std::move(out));
        };
        num_ = strip(num_);
        den_ = strip(den_);
    }
    if (den_.is_constant()) return;
    if (auto q = try_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = Polynomial::constant(n, 1);
        return;
    }
    if (auto q = try_exact_div(den_, num_)) {
        Scalar inv = q->leading_term().second.inverse();
        num_ = Polynomial::constant(n, inv);
        den_ = *q * inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw ZeroDivisor("division by the zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(Polynomial::constant(nvars(), 1)) / pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar RationalFunction::evaluate(const std::vector<Scalar>& point) const {
    Scalar d = den_.evaluate(point);
    if (d.is_zero()) throw ZeroDivisor("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::pair<Polynomial, Polynomial> substitute_linear(const Polynomial& p,
                                                    const Matrix<RationalFunction>& M,
                                                    std::size_t x_vars) {
    const std::size_t n = p.nvars();
    if (M.rows() != n || M.cols() != n)
        throw DimensionMismatch("substitution matrix must be " + std::to_string(n) + " x " +
                                std::to_string(n));
    if (!p.is_zero() && !p.homogeneous_degree())
        throw DegreeMismatch("linear substitution needs a homogeneous polynomial");
    for (const auto& e : M.entries())
        if (e.nvars() != 0 && e.nvars() != x_vars)
            throw DimensionMismatch("matrix entries must live in " + std::to_string(x_vars) + " variables");
    std::vector<Polynomial> dens;
    for (const auto& e : M.entries()) {
        if (e.den().is_constant()) continue;
        Polynomial d = e.den() + Polynomial(x_vars);
        if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    }
    Polynomial D = Polynomial::constant(x_vars, 1);
    for (const auto& d : dens) D = D * d;
    const std::size_t total = x_vars + n;
    std::vector<Polynomial> forms(n, Polynomial(total));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = M(i, j);
            if (e.is_zero()) continue;
            Polynomial num = e.num() + Polynomial(x_vars);
            Polynomial scaled;
            if (e.den().is_constant()) scaled = D * num * e.den().leading_term().second.inverse();
            else scaled = exact_div(D, e.den() + Polynomial(x_vars)) * num;
            forms[i] += scaled.shifted(total, 0) * Polynomial::variable(total, x_vars + j);
        }
    }
    return {p.compose(forms), D};
}

std::optional<std::pair<Scalar, Polynomial>> is_dth_power(const Polynomial& p, unsigned d) {
    if (p.is_zero()) throw InvalidArgument("zero has no d-th root test");
    if (d == 0) throw InvalidArgument("exponent must be positive");
    const std::size_t n = p.nvars();
    const unsigned D = static_cast<unsigned>(p.total_degree());
    if (D % d) return std::nullopt;
    if (D == 0) return std::make_pair(p.constant_term(), Polynomial::constant(n, 1));

    // deterministic shift point: origin, unit vectors, all ones, then seeded draws
    std::vector<Scalar> a(n, Scalar(0));
    auto nonzero_at = [&](const std::vector<Scalar>& x) { return !p.evaluate(x).is_zero(); };
    bool found = nonzero_at(a);
    for (std::size_t i = 0; i < n && !found; ++i) {
        std::fill(a.begin(), a.end(), Scalar(0));
        a[i] = Scalar(1);
        found = nonzero_at(a);
    }
    if (!found) {
        std::fill(a.begin(), a.end(), Scalar(1));
        found = nonzero_at(a);
    }
    std::mt19937_64 gen(0x5eedULL);
    for (unsigned tries = 0; !found; ++tries) {
        if (tries > 10000) throw InvalidArgument("no nonvanishing point found");
        long span = 2 * (static_cast<long>(D) + 1 + tries / 16) + 1;
        for (auto& x : a) x = Scalar(static_cast<long>(gen() % static_cast<std::uint64_t>(span)) - span / 2);
        found = nonzero_at(a);
    }

    std::vector<Polynomial> fwd(n), back(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = Polynomial::variable(n, i) + Polynomial::constant(n, a[i]);
        back[i] = Polynomial::variable(n, i) - Polynomial::constant(n, a[i]);
    }
    Polynomial ps = p.compose(fwd);
    Scalar c0 = ps.constant_term();
    Polynomial P = ps * c0.inverse();
    std::vector<Polynomial> Pk(D + 1);
    for (unsigned k = 0; k <= D; ++k) Pk[k] = P.homogeneous_part(k);

    // series root r = P^(1/d) from d P E(r) = r E(P), E the Euler operator
    const unsigned top = D / d;
    std::vector<Polynomial> r{Polynomial::constant(n, 1)};
    for (unsigned k = 1; k <= D; ++k) {
        Polynomial acc(n);
        for (unsigned j = 0; j < k && j < r.size(); ++j) {
            long w = static_cast<long>(k - j) - static_cast<long>(d * j);
            if (w == 0 || Pk[k - j].is_zero() || r[j].is_zero()) continue;
            acc += r[j] * Pk[k - j] * Scalar(w);
        }
        acc = acc * Scalar(Rational(1, static_cast<long>(d) * k));
        if (k > top) {
            if (!acc.is_zero()) return std::nullopt;
            continue;
        }
        r.push_back(std::move(acc));
    }
    Polynomial g(n);
    for (const auto& rk : r) g += rk;
    g = g.compose(back);
    Scalar lc = g.leading_term().second;
    g = g * lc.inverse();
    Scalar c = c0 * lc.pow(d);
    return std::make_pair(c, g);
}

}  // namespace formforge
