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

#include "formforge/factor.hpp"

#include <algorithm>

#include "formforge/errors.hpp"
#include "formforge/matrix.hpp"

namespace formforge {

namespace {

using ZPoly = std::vector<Integer>;

// Polynomial arithmetic over Z/p, coefficients kept in [0, p).
class ModP {
   public:
    explicit ModP(Integer p) : p_(std::move(p)), rng_(gmp_randinit_default) { rng_.seed(20260415); }

    const Integer& p() const { return p_; }

    void trim(ZPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Integer red(const Integer& x) const {
        Integer r = x % p_;
        if (r < 0) r += p_;
        return r;
    }
    ZPoly reduce(ZPoly a) const {
        for (auto& c : a) c = red(c);
        trim(a);
        return a;
    }
    Integer inv(const Integer& x) const {
        Integer r;
        if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t()))
            throw InvalidArgument("non-invertible residue");
        return r;
    }
    ZPoly sub(ZPoly a, const ZPoly& b) const {
        if (b.size() > a.size()) a.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = red(a[i] - b[i]);
        trim(a);
        return a;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return reduce(std::move(c));
    }
    std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
        if (a.size() < b.size()) return {{}, a};
        ZPoly q(a.size() - b.size() + 1);
        Integer li = inv(b.back());
        for (std::size_t k = a.size(); k-- >= b.size();) {
            Integer f = red(a[k] * li);
            std::size_t s = k - (b.size() - 1);
            q[s] = f;
            if (f != 0)
                for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = red(a[s + i] - f * b[i]);
            if (k == 0) break;
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
    }
    ZPoly mod(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
    ZPoly monic(ZPoly a) const {
        if (a.empty()) return a;
        Integer li = inv(a.back());
        for (auto& c : a) c = red(c * li);
        return a;
    }
    ZPoly gcd(ZPoly a, ZPoly b) const {
        while (!b.empty()) {
            ZPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }
    ZPoly powmod(ZPoly base, const Integer& e, const ZPoly& m) const {
        ZPoly r{Integer(1)};
        base = mod(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }
    ZPoly derivative(const ZPoly& a) const {
        ZPoly d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(red(a[i] * Integer(static_cast<unsigned long>(i))));
        trim(d);
        return d;
    }
    ZPoly random_below(std::size_t deg) {
        ZPoly a(deg);
        for (auto& c : a) c = rng_.get_z_range(p_);
        trim(a);
        return a;
    }

   private:
    Integer p_;
    gmp_randclass rng_;
};

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

std::vector<std::pair<ZPoly, int>> distinct_degree(const ModP& F, ZPoly f) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly x{Integer(0), Integer(1)};
    ZPoly h = x;
    for (int i = 1; degree(f) >= 2 * i; ++i) {
        h = F.powmod(h, F.p(), f);
        ZPoly g = F.gcd(f, F.sub(h, x));
        if (degree(g) > 0) {
            out.emplace_back(g, i);
            f = F.divmod(f, g).first;
            h = F.mod(h, f);
        }
    }
    if (degree(f) > 0) out.emplace_back(F.monic(f), degree(f));
    return out;
}

void equal_degree(ModP& F, const ZPoly& g, int k, std::vector<ZPoly>& out) {
    if (degree(g) == k) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), F.p().get_mpz_t(), static_cast<unsigned long>(k));
    e = (e - 1) / 2;
    for (;;) {
        ZPoly a = F.random_below(static_cast<std::size_t>(degree(g)));
        if (degree(a) < 1) continue;
        ZPoly b = F.sub(F.powmod(a, e, g), ZPoly{Integer(1)});
        ZPoly d = F.gcd(g, b);
        if (degree(d) > 0 && degree(d) < degree(g)) {
            equal_degree(F, d, k, out);
            equal_degree(F, F.monic(F.divmod(g, d).first), k, out);
            return;
        }
    }
}

// Integer primitive polynomial with positive leading coefficient.
ZPoly primitive(const QPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    for (const auto& c : f.coeffs()) z.push_back(Integer(c * l));
    Integer g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

QPoly to_q(const ZPoly& z) {
    std::vector<Rational> c;
    for (const auto& x : z) c.emplace_back(x);
    return QPoly(std::move(c));
}

ZPoly symmetric(const ZPoly& a, const Integer& p) {
    ZPoly s = a;
    Integer half = p / 2;
    for (auto& c : s)
        if (c > half) c -= p;
    return s;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<QPoly> factor_squarefree_rational(const QPoly& f) {
    if (f.degree() < 1) return {};
    if (f.degree() == 1) return {f.monic()};
    ZPoly F = primitive(f);
    const std::size_t n = static_cast<std::size_t>(f.degree());

    Integer norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = abs(F.back()) * (root + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    Integer p;
    mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
    for (;;) {
        ModP M(p);
        ZPoly fp = M.reduce(F);
        if (degree(fp) == static_cast<int>(n) && degree(M.gcd(fp, M.derivative(fp))) == 0) break;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    ModP M(p);
    std::vector<ZPoly> local;
    for (auto& [g, k] : distinct_degree(M, M.monic(M.reduce(F)))) equal_degree(M, g, k, local);

    std::vector<QPoly> out;
    std::vector<ZPoly> rest = local;
    for (std::size_t s = 1; 2 * s <= rest.size();) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            ZPoly G{M.red(F.back())};
            for (auto i : idx) G = M.mul(G, rest[i]);
            QPoly cand = to_q(primitive(to_q(symmetric(G, p))));
            QPoly whole = to_q(F);
            auto [q, r] = whole.divmod(cand);
            if (!r.is_zero()) continue;
            out.push_back(cand.monic());
            F = primitive(q);
            std::vector<ZPoly> keep;
            for (std::size_t i = 0, j = 0; i < rest.size(); ++i) {
                if (j < s && idx[j] == i) ++j;
                else keep.push_back(rest[i]);
            }
            rest = std::move(keep);
            found = true;
            break;
        } while (next_combination(idx, rest.size()));
        if (!found) ++s;
    }
    if (degree(F) > 0) out.push_back(to_q(F).monic());
    return out;
}

QPoly to_qpoly(const KPoly& f) {
    std::vector<Rational> c;
    for (const auto& x : f.coeffs()) c.push_back(x.rational());
    return QPoly(std::move(c));
}

KPoly to_kpoly(const QPoly& f, const Field& K) {
    std::vector<Scalar> c;
    for (const auto& x : f.coeffs()) c.push_back(K ? Scalar::from_rational(K, x) : Scalar(x));
    return KPoly(std::move(c));
}

namespace {

// x -> x + shift
KPoly shift(const KPoly& f, const Scalar& a) {
    KPoly lin{a, Scalar(1)};
    KPoly r;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * lin + KPoly::constant(f.coeffs()[i]);
    return r;
}

// N_{K(x)/Q(x)} of f as a polynomial in x.
QPoly norm_down(const KPoly& f, const Field& K) {
    const std::size_t e = K->degree();
    // f = sum_j g_j(x) s^j
    std::vector<QPoly> g(e);
    for (std::size_t j = 0; j < e; ++j) {
        std::vector<Rational> c;
        for (const auto& x : f.coeffs()) {
            Scalar y = x;
            y += Scalar::from_rational(K, 0);
            c.push_back(y.coeffs()[j]);
        }
        g[j] = QPoly(std::move(c));
    }
    // column i: f * s^i in the basis 1, s, ..., s^{e-1}
    Matrix<QPoly> mat(e, e);
    std::vector<QPoly> col = g;
    const auto& m = K->minpoly();
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t r = 0; r < e; ++r) mat(r, i) = col[r];
        // multiply col by s
        std::vector<QPoly> next(e);
        QPoly top = col[e - 1];
        for (std::size_t r = e; r-- > 1;) next[r] = col[r - 1];
        for (std::size_t r = 0; r < e; ++r) next[r] -= top.scaled(m[r]);
        col = std::move(next);
    }
    return determinant_expand(mat);
}

}  // namespace

std::vector<KPoly> factor_squarefree(const KPoly& f, const Field& K) {
    if (f.degree() < 1) return {};
    if (f.degree() == 1) return {f.monic()};
    if (!K) {
        std::vector<KPoly> out;
        for (const auto& q : factor_squarefree_rational(to_qpoly(f))) out.push_back(to_kpoly(q, K));
        return out;
    }
    Scalar s = Scalar::generator(K);
    for (long k = 0; k < 64; ++k) {
        // g(x) = f(x - k s)
        KPoly g = shift(f, s * Scalar(-k));
        QPoly N = norm_down(g, K);
        if (!is_squarefree(N)) continue;
        std::vector<KPoly> out;
        for (const auto& Ni : factor_squarefree_rational(N)) {
            KPoly h = gcd(g, to_kpoly(Ni, K));
            if (h.degree() > 0) out.push_back(shift(h, s * Scalar(k)).monic());
        }
        return out;
    }
    throw InvalidArgument("no squarefree norm found while factoring");
}

std::vector<std::pair<KPoly, unsigned>> factor(const KPoly& f, const Field& K) {
    std::vector<std::pair<KPoly, unsigned>> out;
    auto parts = squarefree_decomposition(f);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto& q : factor_squarefree(parts[i], K)) out.emplace_back(std::move(q), static_cast<unsigned>(i + 1));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& x = a.first.coeffs();
        const auto& y = b.first.coeffs();
        for (std::size_t i = x.size(); i-- > 0;) {
            int c = Scalar::compare(x[i], y[i]);
            if (c) return c < 0;
        }
        return a.second < b.second;
    });
    return out;
}

}  // namespace formforge
