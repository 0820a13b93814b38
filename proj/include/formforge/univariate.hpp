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

#ifndef FORMFORGE_UNIVARIATE_HPP
#define FORMFORGE_UNIVARIATE_HPP

#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

namespace formforge {

// Dense univariate polynomial over a field-like coefficient type K, stored low
// degree first with no trailing zeros. K needs +, -, *, / and a default zero.
template <class K>
class Univariate {
   public:
    Univariate() = default;
    explicit Univariate(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Univariate(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Univariate constant(const K& k) { return Univariate(std::vector<K>{k}); }
    static Univariate monomial(const K& k, std::size_t deg) {
        std::vector<K> c(deg + 1, k - k);
        c[deg] = k;
        return Univariate(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& lead() const { return c_.back(); }

    Univariate& operator+=(const Univariate& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Univariate& operator-=(const Univariate& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Univariate operator+(Univariate a, const Univariate& b) { return a += b; }
    friend Univariate operator-(Univariate a, const Univariate& b) { return a -= b; }
    friend Univariate operator-(const Univariate& a) {
        Univariate r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Univariate operator*(const Univariate& a, const Univariate& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Univariate(std::move(c));
    }
    Univariate& operator*=(const Univariate& o) { return *this = *this * o; }
    Univariate scaled(const K& k) const {
        std::vector<K> c = c_;
        for (auto& x : c) x *= k;
        return Univariate(std::move(c));
    }
    friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

    Univariate monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lead();
        return scaled(inv);
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<Univariate, Univariate> divmod(const Univariate& b) const {
        Univariate r = *this;
        if (degree() < b.degree()) return {Univariate(), r};
        std::vector<K> q(c_.size() - b.c_.size() + 1);
        K inv = K(1) / b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            K f = r.lead() * inv;
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
            r.c_.pop_back();
            r.trim();
        }
        return {Univariate(std::move(q)), r};
    }
    Univariate operator%(const Univariate& b) const { return divmod(b).second; }
    Univariate operator/(const Univariate& b) const { return divmod(b).first; }

    Univariate derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return Univariate(std::move(c));
    }

    template <class V>
    V evaluate(const V& x, const V& one) const {
        V acc = one - one;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + one * c_[i];
        return acc;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == K()) c_.pop_back();
    }
    std::vector<K> c_;
};

// Monic gcd.
template <class K>
Univariate<K> gcd(Univariate<K> a, Univariate<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g and g monic.
template <class K>
std::tuple<Univariate<K>, Univariate<K>, Univariate<K>> xgcd(const Univariate<K>& a,
                                                             const Univariate<K>& b) {
    Univariate<K> r0 = a, r1 = b;
    Univariate<K> s0 = Univariate<K>::constant(K(1)), s1;
    Univariate<K> t0, t1 = Univariate<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun's squarefree factorization: returns f_1, f_2, ... with f = lc * prod f_i^i.
template <class K>
std::vector<Univariate<K>> squarefree_decomposition(const Univariate<K>& f) {
    std::vector<Univariate<K>> out;
    if (f.degree() < 1) return out;
    Univariate<K> fp = f.derivative();
    Univariate<K> a = gcd(f, fp);
    Univariate<K> b = f / a;
    Univariate<K> c = fp / a;
    Univariate<K> d = c - b.derivative();
    while (b.degree() > 0) {
        Univariate<K> g = gcd(b, d);
        out.push_back(g);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

template <class K>
bool is_squarefree(const Univariate<K>& f) {
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace formforge

#endif
