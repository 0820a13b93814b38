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

#include "formforge/witness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace formforge {

namespace {

std::vector<Scalar> head(const std::vector<Scalar>& v, std::size_t m) {
    return std::vector<Scalar>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
}

std::vector<Scalar> tail(const std::vector<Scalar>& v, std::size_t m) {
    return std::vector<Scalar>(v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
}

std::optional<Matrix<Scalar>> evaluate_matrix(const Matrix<RationalFunction>& M, const std::vector<Scalar>& x) {
    try {
        return M.map([&](const RationalFunction& f) { return f.evaluate(x); });
    } catch (const ZeroDivisor&) {
        return std::nullopt;
    }
}

// det M(X) != 0 as a rational function, checked at a few fixed points. A
// nonzero value anywhere settles it; eight zeros in the box are taken as
// an identically vanishing determinant.
void check_nonsingular(const Matrix<RationalFunction>& M, std::size_t x_vars) {
    std::mt19937_64 gen(0x51a9);
    for (int tries = 0, hits = 0; tries < 64 && hits < 8; ++tries) {
        auto m = evaluate_matrix(M, random_point(gen, x_vars));
        if (!m) continue;
        ++hits;
        if (rank(*m) == m->rows()) return;
    }
    throw SingularWitness("witness matrix has vanishing determinant");
}

Polynomial clearing_denominator(const Matrix<RationalFunction>& M) {
    std::vector<Polynomial> seen;
    Polynomial D(1);
    for (const auto& f : M.entries()) {
        if (f.den().is_constant()) continue;
        if (std::find(seen.begin(), seen.end(), f.den()) != seen.end()) continue;
        seen.push_back(f.den());
        D = D * f.den();
    }
    return D;
}

double saturating_pow(double b, unsigned e) {
    double r = 1;
    for (unsigned i = 0; i < e && r < 1e30; ++i) r *= b;
    return r;
}

// Rough count of monomial products in expanding phi(M Y).
double expansion_work(const HomogeneousForm& phi, const Matrix<RationalFunction>& M, const Polynomial& D) {
    const double dsize = static_cast<double>(std::max<std::size_t>(1, D.size()));
    std::vector<double> t(phi.dim, 0);
    for (std::size_t i = 0; i < phi.dim; ++i)
        for (std::size_t j = 0; j < phi.dim; ++j) {
            const auto& f = M(i, j);
            if (f.is_zero()) continue;
            t[i] += static_cast<double>(f.num().size()) * (f.den().is_constant() ? 1.0 : dsize);
        }
    double work = 0;
    for (const auto& [m, c] : phi.body.terms()) {
        double w = 1;
        for (std::size_t i = 0; i < m.size(); ++i) w *= saturating_pow(t[i], m[i]);
        work += w;
    }
    return work * dsize;
}

RationalFunction lift(const Polynomial& p, std::size_t nvars) {
    return RationalFunction(p.nvars() == 0 ? Polynomial::constant(nvars, p.constant_term()) : p);
}

}  // namespace

BilinearMap bilinear_from_algebra(const AlgebraPresentation& A) {
    BilinearMap z;
    z.z.assign(A.dim, Matrix<Scalar>(A.dim, A.dim));
    for (auto& m : z.z)
        for (std::size_t i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < A.dim; ++j) m(i, j) = Scalar(0);
    for (const auto& e : A.table) z.z[e.k](e.i, e.j) += e.c;
    return z;
}

BilinearMap opposite(const BilinearMap& z) {
    BilinearMap o;
    for (const auto& m : z.z) o.z.push_back(m.transpose());
    return o;
}

RationalFunction generic_value(const HomogeneousForm& phi) { return lift(phi.body, phi.dim); }

VerificationReport verify_scaled_witness(const HomogeneousForm& phi, const ScaledWitness& w,
                                         const VerifyOptions& opts) {
    const std::size_t n = phi.dim, m = w.x_vars;
    if (w.M.rows() != n || w.M.cols() != n) throw DimensionMismatch("witness matrix is not n x n");
    auto arity_ok = [&](const RationalFunction& f) { return f.nvars() == 0 || f.nvars() == m; };
    if (!arity_ok(w.c) || !std::all_of(w.M.entries().begin(), w.M.entries().end(), arity_ok))
        throw DimensionMismatch("witness entries are not functions of the X variables");
    check_nonsingular(w.M, m);

    const unsigned d = phi.degree;
    Polynomial D = clearing_denominator(w.M);
    VerifyMode mode = opts.mode;
    std::string note;
    if (mode == VerifyMode::Auto) {
        double work = expansion_work(phi, w.M, D);
        mode = work <= static_cast<double>(opts.term_budget) ? VerifyMode::Symbolic : VerifyMode::Random;
        if (mode == VerifyMode::Random) {
            std::ostringstream os;
            os << "estimated expansion work " << work << " exceeds term budget " << opts.term_budget;
            note = os.str();
        }
    }

    const std::string identity = "c(X) phi(Y) = phi(M(X) Y)";
    VerificationReport rep;
    if (mode == VerifyMode::Symbolic) {
        auto t0 = std::chrono::steady_clock::now();
        auto [q, D2] = substitute_linear(phi.body, w.M, m);
        const std::size_t N = m + n;
        auto inX = [&](const Polynomial& p) {
            return p.nvars() == 0 ? Polynomial::constant(N, p.constant_term()) : p.shifted(N, 0);
        };
        Polynomial lhs = inX(w.c.num()) * inX(D2).pow(d) * phi.body.shifted(N, m);
        Polynomial rhs = inX(w.c.den()) * (q.nvars() == 0 ? Polynomial::constant(N, q.constant_term()) : q);
        VerifyOptions o = opts;
        o.mode = VerifyMode::Symbolic;
        rep = verify_identity(lhs, rhs, o, identity);
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
        int maxnum = 0;
        for (const auto& f : w.M.entries()) maxnum = std::max(maxnum, f.num().total_degree());
        const int dD = D.total_degree();
        const int dd = static_cast<int>(d);
        int deg = std::max(w.c.num().total_degree() + dd * dD, w.c.den().total_degree() + dd * (maxnum + dD)) + dd;
        auto lhs = [&](const std::vector<Scalar>& p) -> std::optional<Scalar> {
            try {
                return w.c.evaluate(head(p, m)) * phi(tail(p, m));
            } catch (const ZeroDivisor&) {
                return std::nullopt;
            }
        };
        auto rhs = [&](const std::vector<Scalar>& p) -> std::optional<Scalar> {
            auto Mx = evaluate_matrix(w.M, head(p, m));
            if (!Mx) return std::nullopt;
            return phi(Mx->apply(tail(p, m)));
        };
        rep = verify_by_evaluation(m + n, static_cast<unsigned>(std::max(deg, 0)), lhs, rhs, opts.samples,
                                   opts.seed, identity);
    }
    if (!note.empty()) rep.note = rep.note.empty() ? note : note + "; " + rep.note;
    return rep;
}

VerificationReport verify_exponent(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                   unsigned s, const VerifyOptions& opts) {
    auto r = verify_scaled_witness(phi, {phi.dim, generic_value(phi).pow(static_cast<int>(s)), M}, opts);
    r.identity = "phi(X)^" + std::to_string(s) + " phi(Y) = phi(M(X) Y)";
    return r;
}

VerificationReport verify_strong_mult(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                      const VerifyOptions& opts) {
    auto r = verify_scaled_witness(phi, {phi.dim, generic_value(phi), M}, opts);
    r.identity = "phi(X) phi(Y) = phi(M(X) Y)";
    return r;
}

VerificationReport verify_strong_jordan(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                        const VerifyOptions& opts) {
    return verify_exponent(phi, M, 2, opts);
}

VerificationReport verify_similarity(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                     const Scalar& a, const VerifyOptions& opts) {
    std::size_t m = 0;
    for (const auto& f : M.entries()) m = std::max(m, f.nvars());
    auto r = verify_scaled_witness(phi, {m, RationalFunction(a), M}, opts);
    r.identity = a.to_string() + " phi(Y) = phi(M Y)";
    return r;
}

VerificationReport verify_mu_twist(const HomogeneousForm& phi, const Matrix<RationalFunction>& M,
                                   const Scalar& mu, unsigned s, const VerifyOptions& opts) {
    auto c = RationalFunction(mu) * generic_value(phi).pow(static_cast<int>(s));
    auto r = verify_scaled_witness(phi, {phi.dim, c, M}, opts);
    r.identity = mu.to_string() + " phi(X)^" + std::to_string(s) + " phi(Y) = phi(M(X) Y)";
    return r;
}

ScaledWitness witness_from_composition(const HomogeneousForm& phi, const BilinearMap& z) {
    const std::size_t n = phi.dim;
    if (z.dim() != n) throw DimensionMismatch("bilinear map has the wrong number of outputs");
    for (const auto& m : z.z)
        if (m.rows() != n || m.cols() != n) throw DimensionMismatch("structure matrix is not n x n");
    Matrix<RationalFunction> M(n, n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial e(n);
            for (std::size_t i = 0; i < n; ++i)
                if (!z.z[l](i, j).is_zero()) e += Polynomial::variable(n, i) * z.z[l](i, j);
            M(l, j) = RationalFunction(e);
        }
    return {n, generic_value(phi), M};
}

VerificationReport verify_composition(const HomogeneousForm& phi, const BilinearMap& z,
                                      const VerifyOptions& opts) {
    auto r = verify_scaled_witness(phi, witness_from_composition(phi, z), opts);
    r.identity = "phi(x) phi(y) = phi(z(x, y))";
    return r;
}

VerificationReport verify_jordan_composition(const HomogeneousForm& phi, const AlgebraPresentation& A,
                                             const VerifyOptions& opts) {
    if (A.dim != phi.dim) throw DimensionMismatch("algebra and form dimensions differ");
    Scalar at_unit = phi(A.unit);
    if (!at_unit.is_one()) throw UnitMismatch("phi(1) = " + at_unit.to_string());
    auto U = A.u_operator().map([](const Polynomial& p) { return RationalFunction(p); });
    auto r = verify_scaled_witness(phi, {phi.dim, generic_value(phi).pow(2), U}, opts);
    r.identity = "phi({x y x}) = phi(x)^2 phi(y)";
    return r;
}

namespace {

void check_diagonal(const std::vector<Rational>& a, unsigned d) {
    if (a.empty()) throw InvalidArgument("empty diagonal");
    if (d < 3) throw DegreeTooSmall("diagonal decision needs degree >= 3");
    for (const auto& x : a)
        if (x == 0) throw InvalidArgument("diagonal coefficients must be nonzero");
}

HomogeneousForm diagonal_over_q(const std::vector<Rational>& a, unsigned d) {
    std::vector<Scalar> s(a.begin(), a.end());
    return diagonal_form(nullptr, d, s);
}

}  // namespace

DecisionReport diagonal_strong_mult_decision(const std::vector<Rational>& a, unsigned d) {
    check_diagonal(a, d);
    const std::string ds = std::to_string(d);
    if (a.size() == 1) {
        if (auto r = rational_root(a[0], d))
            return {Decision::StronglyMultiplicative,
                    to_string(a[0]) + " = (" + to_string(*r) + ")^" + ds + ", so the form is isometric to <1>"};
        return {Decision::NotStronglyMultiplicative,
                "phi(X) = " + to_string(a[0]) + " x^" + ds + " would have to be a " + ds +
                    "-th power in k(X), but " + to_string(a[0]) + " is not a " + ds + "-th power in Q"};
    }
    auto phi = diagonal_over_q(a, d);
    if (is_dth_power(phi.body, d))
        throw std::logic_error("diagonal form in several variables passed the power test");
    return {Decision::NotStronglyMultiplicative,
            "phi(X) is not a constant times a " + ds + "-th power in k[X]; by unique factorization a "
            "strongly multiplicative diagonal form in " + std::to_string(a.size()) + " variables would need one"};
}

DecisionReport diagonal_jordan_cubic_decision(const std::vector<Rational>& a) {
    check_diagonal(a, 3);
    if (a.size() == 1) {
        if (auto r = rational_root(a[0], 3))
            return {Decision::StronglyMultiplicative,
                    to_string(a[0]) + " = (" + to_string(*r) + ")^3, so the form is isometric to <1>"};
        return {Decision::NotStronglyMultiplicative,
                "phi(X)^2 = " + to_string(a[0] * a[0]) + " x^6 would have to be a cube in k(X), but " +
                    to_string(a[0]) + " is not a cube in Q"};
    }
    auto phi = diagonal_over_q(a, 3);
    if (is_dth_power(phi.body.pow(2), 3))
        throw std::logic_error("squared diagonal cubic passed the cube test");
    return {Decision::NotStronglyMultiplicative,
            "phi(X)^2 is not a constant times a cube in k[X]; since squares and cubes are coprime "
            "exponents, phi(X) itself would have to be a cube up to a constant"};
}

ObstructionReport krull_schmidt_obstruction(const HomogeneousForm& phi) {
    ObstructionReport rep;
    rep.decomposition = krull_schmidt_decompose(phi);
    const auto& comps = rep.decomposition.components;
    for (const auto& c : comps) rep.dimensions.push_back(c.basis.cols());

    std::map<std::size_t, std::size_t> count;
    for (auto dim : rep.dimensions) ++count[dim];
    for (const auto& [dim, k] : count)
        rep.constraints.push_back("the " + std::to_string(k) + " component(s) of dimension " +
                                  std::to_string(dim) + " are permuted among themselves");

    std::vector<Scalar> ones;
    for (const auto& c : comps)
        if (c.basis.cols() == 1) ones.push_back(c.form.body.leading_term().second);
    const unsigned d = phi.degree;
    const std::string ds = std::to_string(d);
    if (ones.empty()) {
        rep.reasons.push_back("no one-dimensional component; no clause reduces to a perfect-power test");
        return rep;
    }

    auto power = is_dth_power(phi.body, d);
    rep.power_tests.push_back("phi(X) = c g^" + ds + ": " +
                              (power ? "yes, c = " + power->first.to_string() : std::string("no")));
    if (!power) {
        rep.obstructed = true;
        if (ones.size() == 1)
            rep.reasons.push_back("unique one-dimensional component <a>: phi(X) <a> = <a> over k(X) forces "
                                  "phi(X) to be a " + ds + "-th power in k(X)");
        else
            rep.reasons.push_back("one-dimensional components <a_i> are permuted: phi(X) a_i / a_sigma(i) must be "
                                  "a " + ds + "-th power in k(X), so phi(X) is a constant times a " + ds +
                                  "-th power");
        rep.reasons.push_back("perfect-power test: phi(X) is not a constant times a " + ds + "-th power");
        return rep;
    }

    if (ones.size() > 8) {
        rep.reasons.push_back("too many one-dimensional components for the permutation search");
        return rep;
    }
    const Scalar& c = power->first;
    std::vector<std::size_t> sigma(ones.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    bool undecided = false;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < ones.size() && ok; ++i) {
            Scalar r = c * ones[i] / ones[sigma[i]];
            if (!r.is_rational()) {
                undecided = true;
                ok = false;
            } else if (!rational_root(r.rational(), d)) {
                ok = false;
            }
        }
        if (ok) {
            rep.reasons.push_back("a permutation of the one-dimensional components is compatible with "
                                  "phi(X) = c g^" + ds + "; no obstruction found");
            return rep;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    rep.power_tests.push_back("c a_i / a_sigma(i) rational " + ds + "-th powers for some sigma: no");
    if (undecided) {
        rep.reasons.push_back("some ratios lie outside Q; their power test is not available");
        return rep;
    }
    rep.obstructed = true;
    rep.reasons.push_back("phi(X) = c g^" + ds + " but no permutation sigma makes every c a_i / a_sigma(i) a " +
                          ds + "-th power in k");
    return rep;
}

std::optional<Scalar> root_of_unity_ratio(const Polynomial& f, const Polynomial& g, unsigned m) {
    if (m == 0) throw InvalidArgument("root of unity order must be positive");
    if (g.is_zero()) return f.is_zero() ? std::optional<Scalar>(Scalar(1)) : std::nullopt;
    const auto& [mono, lc] = g.leading_term();
    Scalar eta = f.is_zero() ? Scalar(0) : f.coeff(mono) / lc;
    if (eta.is_zero() || !eta.pow(m).is_one()) return std::nullopt;
    if (f != g * eta) return std::nullopt;
    return eta;
}

std::pair<HomogeneousForm, ScaledWitness> twist_witness(const HomogeneousForm& phi0, const ScaledWitness& w,
                                                        const Scalar& mu, const VerifyOptions& opts) {
    if (mu.is_zero()) throw InvalidArgument("twist scalar must be nonzero");
    if (!(w.c == generic_value(phi0))) throw WitnessInvalid("input witness does not have c = phi0(X)");
    if (verify_scaled_witness(phi0, w, opts).refuted()) throw WitnessInvalid("input witness does not verify");
    const unsigned d = phi0.degree;
    HomogeneousForm phi = scaled(phi0, mu.pow(d - 1));
    ScaledWitness out{w.x_vars, RationalFunction(mu) * generic_value(phi), w.M.scaled(RationalFunction(mu))};
    if (verify_scaled_witness(phi, out, opts).refuted()) throw WitnessInvalid("twisted witness does not verify");
    return {phi, out};
}

std::optional<ScaledWitness> absorb_dth_power(const ScaledWitness& w, const Scalar& mu, unsigned d) {
    if (!mu.is_rational() || mu.is_zero()) return std::nullopt;
    auto lambda = rational_root(mu.rational(), d);
    if (!lambda) return std::nullopt;
    Rational inv = 1 / *lambda;
    return ScaledWitness{w.x_vars, w.c * RationalFunction(Scalar(mu.inverse())),
                         w.M.scaled(RationalFunction(Scalar(inv)))};
}

ExponentReduction reduce_exponent(unsigned d, unsigned s) {
    if (s < 1 || s >= d) throw InvalidArgument("exponent must satisfy 1 <= s <= d - 1");
    unsigned e = std::gcd(d, s);
    return {e, e == 1};
}

bool exponent_implies_strong(unsigned d, unsigned s) { return reduce_exponent(d, s).implies_strong; }

ScaledWitness reduce_exponent_witness(const HomogeneousForm& phi, const Matrix<RationalFunction>& Ms, unsigned s) {
    const unsigned d = phi.degree;
    const unsigned e = reduce_exponent(d, s).e;
    unsigned u = 1;
    while ((u * s) % d != e % d) ++u;
    const unsigned v = (u * s - e) / d;
    Matrix<RationalFunction> Me = Ms;
    for (unsigned i = 1; i < u; ++i) Me = Me * Ms;
    RationalFunction f = generic_value(phi);
    if (v) Me = Me.scaled(f.pow(-static_cast<int>(v)));
    return {phi.dim, f.pow(static_cast<int>(e)), Me};
}

ScaledWitness jordan_to_strong_witness(const HomogeneousForm& phi, const Matrix<RationalFunction>& M2) {
    if (phi.degree % 2 == 0) throw InvalidArgument("exponent 2 to 1 needs odd degree");
    if (phi.degree < 3) throw InvalidArgument("exponent 2 to 1 needs degree >= 3");
    return reduce_exponent_witness(phi, M2, 2);
}

}  // namespace formforge
