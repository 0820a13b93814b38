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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "formforge/constructions.hpp"
#include "formforge/decompose.hpp"
#include "formforge/witness.hpp"

using namespace formforge;

namespace {

// pinned tolerances
constexpr double kIdentitySeconds = 60.0;    // per composition identity
constexpr std::size_t kJordanSamples = 200;  // det3 fallback
constexpr std::uint64_t kJordanSeed = 0x5eed;
constexpr std::size_t kSoundnessPoints = 100;
constexpr std::uint64_t kSoundnessSeeds[] = {11, 12, 13};
constexpr std::uint64_t kPolarizeSeed = 20260101;
constexpr int kPolarizeForms = 50;
constexpr int kDeterminismRuns = 5;

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

VerifyOptions symbolic() {
    VerifyOptions o;
    o.mode = VerifyMode::Symbolic;
    return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Scalar> rand_vec(std::mt19937_64& gen, std::size_t n, long r) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(gen() % (2 * r + 1)) - r);
    return v;
}

void polarization(Check& c) {
    std::mt19937_64 gen(kPolarizeSeed);
    int agree = 0, round = 0;
    for (int t = 0; t < kPolarizeForms; ++t) {
        unsigned d = 2 + static_cast<unsigned>(gen() % 4);
        std::size_t n = 1 + gen() % 4;
        std::vector<Polynomial::Term> terms;
        for_each_sorted_tuple(n, d, [&](const Index& idx) {
            Monomial m(n, 0);
            for (auto i : idx) ++m[i];
            terms.emplace_back(m, Scalar(static_cast<long>(gen() % 19) - 9));
        });
        HomogeneousForm phi(nullptr, d, n, Polynomial::from_terms(n, terms));
        auto a = polarize_alternating(phi), b = polarize_multinomial(phi);
        agree += a == b;
        round += depolarize(a) == phi;
    }
    c.require(agree == kPolarizeForms, "algorithms disagree");
    c.require(round == kPolarizeForms, "round trip");
    c.detail << kPolarizeForms << " forms, round trip " << round << ", agreement " << agree;
}

void compositions(Check& c) {
    std::vector<ConstructedForm> forms = {det_norm(2),
                                          det_norm(3),
                                          composition_algebra_norm({-1}),
                                          composition_algebra_norm({-1, -1}),
                                          composition_algebra_norm({-1, -1, -1}),
                                          hyperbolic_plane()};
    const char* names[] = {"det2", "det3", "binary", "quaternion", "octonion", "hyperbolic"};
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = verify_composition(forms[i].form, *forms[i].composition, symbolic());
        double s = seconds_since(t0);
        c.require(r.proved(), std::string(names[i]) + " not proved");
        c.require(s < kIdentitySeconds, std::string(names[i]) + " too slow");
        c.detail << names[i] << " " << std::fixed << std::setprecision(3) << s << "s ";
    }
}

void jordan(Check& c) {
    auto r2 = verify_jordan_composition(det_norm(2).form, matrix_algebra(2), symbolic());
    c.require(r2.proved(), "det2");
    VerifyOptions o;
    o.mode = VerifyMode::Auto;
    o.samples = kJordanSamples;
    o.seed = kJordanSeed;
    o.term_budget = term_budget_from_env();
    auto r3 = verify_jordan_composition(det_norm(3).form, matrix_algebra(3), o);
    if (r3.mode == VerifyMode::Symbolic) {
        c.require(r3.proved(), "det3 symbolic");
        c.detail << "det2 proved, det3 proved symbolically";
    } else {
        c.require(r3.verdict == Verdict::Evidence && r3.samples >= kJordanSamples, "det3 random");
        c.detail << "det2 proved, det3 evidence from " << r3.samples << " samples";
    }
}

void tits(Check& c) {
    c.require(verify_tits_cubic_generic(symbolic()).proved(), "generic product identity");
    for (long a : {2L, 3L}) {
        auto phi = tits_cubic(Scalar(a)).form;
        c.require(krull_schmidt_decompose(phi).components.size() == 1, "one component");
        c.require(!krull_schmidt_obstruction(phi).obstructed, "consistent-unknown");
    }
    c.detail << "N(xy) = N(x)N(y) with symbolic a; single component and no obstruction for a = 2, 3";
}

bool is_int_power(long a, unsigned d) {
    for (long r = 1;; ++r) {
        long p = 1;
        for (unsigned i = 0; i < d; ++i) p *= r;
        if (p == a) return true;
        if (p > a) return false;
    }
}

void decisions(Check& c) {
    const std::vector<long> coeffs = {1, 2, 3, 4, 8};
    int cases = 0, good = 0;
    for (unsigned d : {3u, 4u})
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                std::vector<Rational> a;
                for (auto i : idx) a.emplace_back(coeffs[i]);
                bool expect = n == 1 && is_int_power(coeffs[idx[0]], d);
                ++cases;
                good += (diagonal_strong_mult_decision(a, d).decision == Decision::StronglyMultiplicative) == expect;
                std::size_t k = 0;
                while (k < n && ++idx[k] == coeffs.size()) idx[k++] = 0;
                if (k == n) break;
            }
        }
    int rejected = 0;
    for (long a : coeffs) {
        Rational q(a);
        rejected += diagonal_strong_mult_decision({1, q}, 3).decision == Decision::NotStronglyMultiplicative;
        rejected += diagonal_strong_mult_decision({1, q, q * q}, 3).decision == Decision::NotStronglyMultiplicative;
        rejected += diagonal_jordan_cubic_decision({1, q}).decision == Decision::NotStronglyMultiplicative;
        rejected += diagonal_jordan_cubic_decision({1, q, q * q}).decision == Decision::NotStronglyMultiplicative;
    }
    c.require(good == cases, "grid");
    c.require(rejected == 4 * static_cast<int>(coeffs.size()), "<1,a> and <1,a,a^2> cubics");
    c.detail << good << "/" << cases << " grid decisions, " << rejected << "/20 cubic rejections";
}

void krull_schmidt(Check& c) {
    auto diag = diagonal_form(nullptr, 3, {1, 2, 3});
    auto d = krull_schmidt_decompose(diag);
    bool three = d.components.size() == 3;
    for (const auto& comp : d.components) three = three && comp.form.dim == 1;
    c.require(three, "three 1-dim components");
    c.require(reconstruction_holds(diag, d), "reconstruction of <1,2,3>");
    auto mono = monomial({1, 2}).form;
    auto m = krull_schmidt_decompose(mono);
    c.require(m.components.size() == 1, "x1 x2^2 one component");
    c.require(is_absolutely_indecomposable(mono), "x1 x2^2 absolutely indecomposable");
    c.require(reconstruction_holds(mono, m), "reconstruction of x1 x2^2");
    auto mixed = orthogonal_sum(diag, mono);
    auto first = krull_schmidt_decompose(mixed);
    bool same = true;
    for (int k = 0; k < kDeterminismRuns; ++k) {
        auto again = krull_schmidt_decompose(mixed);
        same = same && again.components.size() == first.components.size();
        for (std::size_t i = 0; same && i < first.components.size(); ++i)
            same = again.components[i].form == first.components[i].form &&
                   again.components[i].basis == first.components[i].basis;
    }
    c.require(same, "determinism");
    c.detail << "components 3 and 1, reconstruction exact, " << kDeterminismRuns << " identical runs";
}

void norm_composition(Check& c) {
    auto A = EtaleAlgebra::extend(nullptr, {-5, 0, 1});
    auto phi0 = diagonal_form(nullptr, 2, {1, 2});
    auto reg = norm_compose(A, phi0).form;
    auto conj = norm_compose_conjugates(A, phi0, Scalar(-1));
    c.require(reg == conj, "quadratic routes agree");
    c.require(reg.degree == 4 && reg.dim == 4, "quartic in 4 variables");

    auto padded = diagonal_form(nullptr, 2, {1, 2, 0});
    auto pf = norm_compose(A, padded).form;
    auto th = polarize(pf);
    std::mt19937_64 gen(7);
    bool contained = true;
    for (std::size_t i : {4u, 5u}) {
        std::vector<Scalar> e(6);
        e[i] = 1;
        for (int k = 0; k < 10; ++k)
            contained = contained && th.evaluate({e, rand_vec(gen, 6, 5), rand_vec(gen, 6, 5), rand_vec(gen, 6, 5)}).is_zero();
    }
    c.require(contained, "radical containment");

    auto K = NumberField::create({1, 1, 1});
    auto B = EtaleAlgebra::extend(K, {-2, 0, 0, 1});
    auto psi0 = diagonal_form(K, 2, {1, 2});
    auto six = norm_compose(B, psi0).form;
    c.require(six.degree == 6 && six.body.homogeneous_degree() == std::optional<unsigned>(6), "homogeneous sextic");
    c.require(is_nondegenerate(six), "sextic nondegenerate");
    c.require(norm_compose_conjugates(B, psi0, Scalar::generator(K)) == six, "cube-root routes agree");
    c.detail << "quartic routes agree, radical contained, sextic over Q(w) agrees and is nondegenerate";
}

void structurable(Check& c) {
    auto t = jordan_triple_from_degree3(matrix_algebra(3), Scalar(1));
    c.require(adjoint_identities_hold(t), "adj(adj X) = det(X) X");
    auto q = structurable_quartic(t).form;
    std::vector<Scalar> unit(q.dim);
    unit.front() = 1;
    unit.back() = 1;
    c.require(q(unit) == Scalar(1), "N_A(1) = 1");
    c.require(q.dim == 20 && radical(q).empty(), "radical 0");

    auto alb = split_albert_norm();
    c.require(alb.form(alb.algebra->unit) == Scalar(1), "Albert N(1) = 1");
    const auto& sh = *alb.sharp;
    bool adj = true;
    for (std::size_t i = 0; i < sh.size(); ++i)
        adj = adj && sh[i].compose(sh) == alb.form.body * Polynomial::variable(27, i);
    c.require(adj, "Albert (X#)# = N(X) X");
    c.detail << "adjoint identities, N_A(1) = 1, nondegenerate in 20 variables, Albert identities in 27 variables";
}

void cayley_dickson(Check& c) {
    auto B = split_etale_algebra(4);
    std::mt19937_64 gen(9);
    for (long mu : {1L, 2L, -3L}) {
        Scalar M(mu);
        auto q = cayley_dickson_quartic(B, M).form;
        for (int k = 0; k < 10; ++k) {
            auto b = rand_vec(gen, 4, 6);
            Scalar prod = b[0] * b[1] * b[2] * b[3];
            std::vector<Scalar> x1(8), x2(8);
            std::copy(b.begin(), b.end(), x1.begin());
            std::copy(b.begin(), b.end(), x2.begin() + 4);
            c.require(q(x1) == prod, "value at (b, 0)");
            c.require(q(x2) == M * M * prod, "value at (0, b)");
        }
        c.require(is_nondegenerate(q), "nondegenerate");
    }
    c.detail << "values at (b,0) and (0,b) match Q(b) and mu^2 Q(b) for mu = 1, 2, -3; nondegenerate";
}

void exponents(Check& c) {
    int pairs = 0, good = 0;
    for (unsigned d = 2; d <= 12; ++d)
        for (unsigned s = 1; s < d; ++s) {
            std::vector<bool> in(d, false);
            for (unsigned x = 0, k = 0; k < d; ++k, x = (x + s) % d) in[x] = true;
            unsigned e = d;
            for (unsigned k = 1; k < d; ++k)
                if (in[k]) {
                    e = k;
                    break;
                }
            auto r = reduce_exponent(d, s);
            ++pairs;
            good += r.e == e && r.implies_strong == in[1 % d];
        }
    c.require(good == pairs, "subgroup closure");
    c.require(reduce_exponent(3, 2).e == 1 && exponent_implies_strong(3, 2), "d = 3");
    bool all = true;
    for (unsigned d : {5u, 7u})
        for (unsigned s = 1; s < d; ++s) all = all && exponent_implies_strong(d, s);
    c.require(all, "d = 5, 7");
    c.require(reduce_exponent(6, 4).e == 2 && !exponent_implies_strong(6, 4), "d = 6, s = 4");
    c.detail << good << "/" << pairs << " pairs match closure; d = 3, 5, 7 and (6, 4) facts hold";
}

void soundness(Check& c) {
    int witnesses = 0, symbolic_proved = 0, random_only = 0, compositions = 0, jordans = 0;
    auto random_agrees = [&](const std::function<VerificationReport(const VerifyOptions&)>& verify,
                             const VerificationReport& sym) {
        for (auto seed : kSoundnessSeeds) {
            VerifyOptions o;
            o.mode = VerifyMode::Random;
            o.samples = kSoundnessPoints;
            o.seed = seed;
            auto r = verify(o);
            if (sym.proved() && r.verdict != Verdict::Evidence) return false;
            if (r.verdict == Verdict::Refuted) return false;
        }
        return true;
    };
    for (const auto& f : catalog()) {
        VerifyOptions o;
        o.term_budget = term_budget_from_env();
        if (f.witness) {
            ++witnesses;
            auto verify = [&](const VerifyOptions& opt) { return verify_scaled_witness(f.form, *f.witness, opt); };
            auto r = verify(o);
            if (r.mode == VerifyMode::Symbolic) {
                symbolic_proved += r.proved();
                c.require(r.proved(), f.kind + " witness");
            } else {
                ++random_only;
                c.require(r.verdict == Verdict::Evidence, f.kind + " witness (random)");
            }
            c.require(random_agrees(verify, r), f.kind + " random contradicts");
        }
        if (f.composition) {
            ++compositions;
            auto verify = [&](const VerifyOptions& opt) { return verify_composition(f.form, *f.composition, opt); };
            auto r = verify(o);
            c.require(r.mode == VerifyMode::Symbolic ? r.proved() : r.verdict == Verdict::Evidence,
                      f.kind + " composition");
            c.require(random_agrees(verify, r), f.kind + " composition random contradicts");
        }
        if (f.algebra && f.kind == "albert") {
            ++jordans;
            auto verify = [&](const VerifyOptions& opt) { return verify_jordan_composition(f.form, *f.algebra, opt); };
            auto r = verify(o);
            c.require(r.mode == VerifyMode::Symbolic ? r.proved() : r.verdict == Verdict::Evidence, "albert jordan");
            c.require(random_agrees(verify, r), "albert jordan random contradicts");
        }
    }
    c.detail << witnesses << " witnesses (" << symbolic_proved << " proved symbolically, " << random_only
             << " over budget), " << compositions << " compositions, " << jordans << " Jordan identity; "
             << kSoundnessPoints << " points x 3 seeds, no contradiction";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*run)(Check&);
    };
    const Criterion criteria[] = {
        {"polarization round trip", polarization},
        {"composition identities", compositions},
        {"jordan composition", jordan},
        {"tits cubic", tits},
        {"diagonal decisions", decisions},
        {"krull-schmidt", krull_schmidt},
        {"norm composition", norm_composition},
        {"structurable quartic and albert norm", structurable},
        {"cayley-dickson quartic", cayley_dickson},
        {"exponent calculus", exponents},
        {"witness soundness", soundness},
    };
    int failed = 0, n = 0;
    auto total = std::chrono::steady_clock::now();
    for (const auto& cr : criteria) {
        ++n;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << " [exception: " << e.what() << "]";
        }
        std::printf("%s %2d %s (%.2fs): %s\n", c.ok ? "PASS" : "FAIL", n, cr.name, seconds_since(t0),
                    c.detail.str().c_str());
        std::fflush(stdout);
        failed += !c.ok;
    }
    std::printf("%d/%d criteria passed in %.1fs\n", n - failed, n, seconds_since(total));
    return failed == 0 ? 0 : 1;
}
