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

#include "formforge/constructions.hpp"

#include <sstream>

namespace formforge {

namespace {

std::string join(const std::vector<Scalar>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s;
}

Matrix<RationalFunction> to_rf(const Matrix<Polynomial>& m) {
    return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

std::vector<Polynomial> vars(std::size_t nvars, std::size_t offset, std::size_t count) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(Polynomial::variable(nvars, offset + i));
    return v;
}

std::vector<std::size_t> range(std::size_t offset, std::size_t count) {
    std::vector<std::size_t> r(count);
    for (std::size_t i = 0; i < count; ++i) r[i] = offset + i;
    return r;
}

BilinearMap bilinear_from_etale(const EtaleAlgebra& A) {
    const std::size_t m = A.dim();
    BilinearMap z;
    z.z.assign(m, Matrix<Scalar>(m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto& c = A.product(i, j);
            for (std::size_t k = 0; k < m; ++k) z.z[k](i, j) = c[k];
        }
    return z;
}

// phi0(v) as an element of A with polynomial coordinates in u_{j,i}.
std::vector<Polynomial> value_in_algebra(const EtaleAlgebra& A, const HomogeneousForm& phi0) {
    if (phi0.field && !same_field(phi0.field, A.base()))
        throw FieldMismatch("phi0 coefficients are not in the base field of A");
    const std::size_t m = A.dim(), n = phi0.dim, N = m * n;
    std::vector<std::vector<Polynomial>> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = vars(N, j * m, m);
    std::vector<Polynomial> unit;
    for (const auto& u : A.unit()) unit.push_back(Polynomial::constant(N, u));
    std::vector<Polynomial> acc(m, Polynomial(N));
    for (const auto& [mono, c] : phi0.body.terms()) {
        std::vector<Polynomial> t = unit;
        for (auto& x : t) x = x * c;
        for (std::size_t j = 0; j < n; ++j)
            for (unsigned e = 0; e < mono[j]; ++e) t = A.multiply(t, v[j]);
        for (std::size_t k = 0; k < m; ++k) acc[k] += t[k];
    }
    return acc;
}

}  // namespace

ConstructedForm diagonal(const Field& field, unsigned degree, const std::vector<Scalar>& a) {
    ConstructedForm f;
    f.kind = "diagonal";
    f.params = {{"degree", std::to_string(degree)}, {"a", join(a)}};
    f.form = diagonal_form(field, degree, a);
    return f;
}

ConstructedForm monomial(const std::vector<unsigned>& exponents) {
    if (exponents.empty()) throw InvalidArgument("monomial needs at least one exponent");
    Monomial mono;
    std::string p;
    unsigned d = 0;
    for (auto e : exponents) {
        if (e == 0) throw InvalidArgument("monomial exponents must be positive");
        mono.push_back(static_cast<std::uint16_t>(e));
        d += e;
        p += (p.empty() ? "" : ",") + std::to_string(e);
    }
    ConstructedForm f;
    f.kind = "monomial";
    f.params = {{"exponents", p}};
    f.form = HomogeneousForm(nullptr, d, exponents.size(), Polynomial::monomial(exponents.size(), mono, 1));
    return f;
}

ConstructedForm product_form(const std::vector<std::pair<HomogeneousForm, unsigned>>& factors) {
    if (factors.empty()) throw InvalidArgument("product of no forms");
    std::size_t N = 0;
    unsigned d = 0;
    Field field;
    for (const auto& [phi, s] : factors) {
        if (s == 0) throw InvalidArgument("product exponents must be positive");
        N += phi.dim;
        d += phi.degree * s;
        field = join_fields(field, phi.field);
    }
    Polynomial body = Polynomial::constant(N, 1);
    std::size_t off = 0;
    std::string p;
    for (const auto& [phi, s] : factors) {
        body = body * phi.body.shifted(N, off).pow(s);
        off += phi.dim;
        p += (p.empty() ? "" : ",") + std::to_string(s);
    }
    ConstructedForm f;
    f.kind = "product";
    f.params = {{"exponents", p}};
    f.form = HomogeneousForm(field, d, N, body);
    return f;
}

ConstructedForm norm_compose(const EtaleAlgebra& A, const HomogeneousForm& phi0) {
    auto y = value_in_algebra(A, phi0);
    Polynomial body = A.norm_generic(y);
    ConstructedForm f;
    f.kind = "norm-compose";
    f.params = {{"algebra", A.describe()}, {"degree0", std::to_string(phi0.degree)}};
    f.form = HomogeneousForm(A.base(), phi0.degree * static_cast<unsigned>(A.dim()), A.dim() * phi0.dim, body);
    return f;
}

HomogeneousForm norm_compose_conjugates(const EtaleAlgebra& A, const HomogeneousForm& phi0, const Scalar& zeta) {
    const std::size_t m = A.dim();
    const auto& f = A.minpoly();
    if (!f) throw InvalidArgument("conjugate product needs a monogenic algebra");
    for (std::size_t i = 1; i < m; ++i)
        if (!(*f)[i].is_zero()) throw InvalidArgument("conjugate product needs t^m - c");
    for (std::size_t k = 1; k < m; ++k)
        if (zeta.pow(static_cast<unsigned>(k)).is_one()) throw InvalidArgument("zeta is not a primitive root of unity");
    if (!zeta.pow(static_cast<unsigned>(m)).is_one()) throw InvalidArgument("zeta is not a root of unity of order m");

    auto y = value_in_algebra(A, phi0);
    std::vector<Polynomial> prod = y;
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<Polynomial> conj = y;
        Scalar z = zeta.pow(static_cast<unsigned>(k)), zi = 1;
        for (std::size_t i = 0; i < m; ++i, zi *= z) conj[i] = conj[i] * zi;
        prod = A.multiply(prod, conj);
    }
    for (std::size_t i = 1; i < m; ++i)
        if (!prod[i].is_zero()) throw std::logic_error("conjugate product left the base field");
    return HomogeneousForm(join_fields(A.base(), zeta.field()), phi0.degree * static_cast<unsigned>(m), m * phi0.dim,
                           prod[0]);
}

ConstructedForm det_norm(std::size_t d) {
    if (d < 2 || d > 4) throw InvalidArgument("det_norm supports 2 <= d <= 4");
    auto A = matrix_algebra(d);
    ConstructedForm f;
    f.kind = "det";
    f.params = {{"d", std::to_string(d)}};
    f.form = *A.norm;
    f.composition = bilinear_from_algebra(A);
    f.witness = witness_from_composition(f.form, *f.composition);
    f.witness_role = "strong-mult";
    f.algebra = A;
    const std::size_t n = d * d;
    f.similarity = [d, n](const RationalFunction& c) {
        auto S = Matrix<RationalFunction>::identity(n, RationalFunction(1));
        for (std::size_t j = 0; j < d; ++j) S(j, j) = c;
        return S;
    };
    return f;
}

ConstructedForm composition_algebra_norm(const std::vector<Scalar>& params) {
    if (params.empty() || params.size() > 3) throw InvalidArgument("composition algebras take 1 to 3 parameters");
    for (const auto& a : params)
        if (a.is_zero()) throw InvalidArgument("composition algebra parameters must be nonzero");
    auto A = cayley_dickson(params, params[0].field());
    ConstructedForm f;
    f.kind = "pfister";
    f.params = {{"a", join(params)}};
    f.form = *A.norm;
    f.composition = bilinear_from_algebra(A);
    f.witness = witness_from_composition(f.form, *f.composition);
    f.witness_role = "strong-mult";
    f.algebra = A;
    return f;
}

ConstructedForm hyperbolic_plane() {
    auto f = composition_algebra_norm({Scalar(1)});
    f.kind = "hyperbolic";
    f.params.clear();
    return f;
}

ConstructedForm tits_cubic(const Scalar& a) {
    if (a.is_zero()) throw InvalidArgument("tits cubic needs a != 0");
    const Field& K = a.field();
    auto A = EtaleAlgebra::extend(K, {-a, Scalar(0), Scalar(0), Scalar(1)});
    auto X = vars(3, 0, 3);
    ConstructedForm f;
    f.kind = "tits-cubic";
    f.params = {{"a", a.to_string()}};
    f.form = HomogeneousForm(K, 3, 3, A.norm_generic(X));
    f.composition = bilinear_from_etale(A);
    f.witness = ScaledWitness{3, generic_value(f.form), to_rf(A.regular(X))};
    f.witness_role = "strong-mult";
    return f;
}

VerificationReport verify_tits_cubic_generic(const VerifyOptions& opts) {
    // variables: a, x0, x1, x2, y0, y1, y2
    const std::size_t N = 7;
    Polynomial a = Polynomial::variable(N, 0);
    auto x = vars(N, 1, 3), y = vars(N, 4, 3);
    std::vector<Polynomial> p(5, Polynomial(N));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) p[i + j] += x[i] * y[j];
    // t^3 = a, t^4 = a t
    std::vector<Polynomial> z = {p[0] + a * p[3], p[1] + a * p[4], p[2]};
    auto norm = [&](const std::vector<Polynomial>& v) {
        return v[0].pow(3) + a * v[1].pow(3) + a * a * v[2].pow(3) - Polynomial(3) * a * v[0] * v[1] * v[2];
    };
    auto r = verify_identity(norm(z), norm(x) * norm(y), opts, "N(x y) = N(x) N(y) in k[a][t]/(t^3 - a)");
    return r;
}

ConstructedForm split_albert_norm() {
    auto A = split_albert_algebra();
    ConstructedForm f;
    f.kind = "albert";
    f.form = *A.norm;
    f.sharp = albert_sharp();
    f.witness = ScaledWitness{27, generic_value(f.form).pow(2), to_rf(A.u_operator())};
    f.witness_role = "strong-jordan";
    f.algebra = A;
    return f;
}

AdmissibleTriple make_admissible_triple(const Matrix<Scalar>& T, const HomogeneousForm& N, const HomogeneousForm& Np) {
    if (N.degree != 3 || Np.degree != 3) throw DegreeMismatch("admissible triples need cubic forms");
    if (T.rows() != N.dim || T.cols() != Np.dim) throw DimensionMismatch("pairing shape");
    if (T.rows() != T.cols() || rank(T) != T.rows()) throw DegeneratePairing("pairing is degenerate");
    AdmissibleTriple t;
    t.field = join_fields(N.field, Np.field);
    t.T = T;
    t.N = N;
    t.Np = Np;
    Matrix<Scalar> Ti = inverse(T);
    const std::size_t n = N.dim;
    for (std::size_t l = 0; l < n; ++l) {
        Polynomial s(n), sp(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!Ti(l, k).is_zero()) s += N.body.derivative(k) * Ti(l, k);
            if (!Ti(k, l).is_zero()) sp += Np.body.derivative(k) * Ti(k, l);
        }
        t.sharp.push_back(s);
        t.sharp_p.push_back(sp);
    }
    return t;
}

AdmissibleTriple jordan_triple_from_degree3(const AlgebraPresentation& J, const Scalar& zeta) {
    if (zeta.is_zero()) throw InvalidArgument("zeta must be nonzero");
    if (!J.norm || J.norm->degree != 3) throw InvalidArgument("algebra needs a cubic norm");
    if (!J.trace) throw InvalidArgument("algebra needs a trace");
    Matrix<Scalar> T = J.trace_pairing();
    if (rank(T) != T.rows()) throw DegeneratePairing("trace pairing of " + J.name + " is degenerate");
    return make_admissible_triple(T.scaled(zeta), scaled(*J.norm, zeta), scaled(*J.norm, zeta * zeta));
}

bool adjoint_identities_hold(const AdmissibleTriple& t) {
    const std::size_t n = t.dim_j();
    for (std::size_t l = 0; l < n; ++l) {
        if (t.sharp_p[l].compose(t.sharp) != t.N.body * Polynomial::variable(n, l)) return false;
        if (t.sharp[l].compose(t.sharp_p) != t.Np.body * Polynomial::variable(n, l)) return false;
    }
    return true;
}

ConstructedForm structurable_quartic(const AdmissibleTriple& t) {
    if (!adjoint_identities_hold(t)) throw AdjointIdentityFailure("(j#)# = N(j) j fails for the triple");
    const std::size_t dj = t.dim_j(), djp = t.dim_jp(), n = 2 + dj + djp;
    auto jw = range(1, dj), jpw = range(1 + dj, djp);
    Polynomial alpha = Polynomial::variable(n, 0), beta = Polynomial::variable(n, n - 1);
    std::vector<Polynomial> js, jps, j = vars(n, 1, dj), jp = vars(n, 1 + dj, djp);
    for (const auto& p : t.sharp) js.push_back(p.embed(n, jw));
    for (const auto& p : t.sharp_p) jps.push_back(p.embed(n, jpw));
    Polynomial tjj = t.pairing(j, jp);
    Polynomial body = Polynomial(4) * alpha * t.N.body.embed(n, jw) + Polynomial(4) * beta * t.Np.body.embed(n, jpw) -
                      Polynomial(4) * t.pairing(jps, js) + (alpha * beta - tjj).pow(2);
    ConstructedForm f;
    f.kind = "structurable";
    f.params = {{"dim_j", std::to_string(dj)}, {"dim_jp", std::to_string(djp)}};
    f.form = HomogeneousForm(t.field, 4, n, body);
    return f;
}

namespace {

// [a j; j' b] with R coordinates.
template <class R>
struct Arr {
    R a;
    std::vector<R> j, jp;
    R b;
};

template <class R>
struct ArrOps {
    const AdmissibleTriple& t;
    Arr<R> mul(const Arr<R>& x, const Arr<R>& y) const {
        // [a j; j' b][c i; i' d] = [ac + T(j,i'), ai + dj + j' x' i'; cj' + bi' + j x i, bd + T(i,j')]
        Arr<R> r;
        r.a = x.a * y.a + t.pairing(x.j, y.jp);
        r.b = x.b * y.b + t.pairing(y.j, x.jp);
        auto cp = t.cross_p(x.jp, y.jp);
        auto c = t.cross(x.j, y.j);
        r.j.resize(x.j.size());
        r.jp.resize(x.jp.size());
        for (std::size_t k = 0; k < x.j.size(); ++k) r.j[k] = x.a * y.j[k] + y.b * x.j[k] + cp[k];
        for (std::size_t k = 0; k < x.jp.size(); ++k) r.jp[k] = y.a * x.jp[k] + x.b * y.jp[k] + c[k];
        return r;
    }
    static Arr<R> bar(Arr<R> x) {
        std::swap(x.a, x.b);
        return x;
    }
    static Arr<R> lin(const Arr<R>& x, const Scalar& s, const Arr<R>& y) {
        Arr<R> r = x;
        r.a = r.a + y.a * s;
        r.b = r.b + y.b * s;
        for (std::size_t k = 0; k < r.j.size(); ++k) r.j[k] = r.j[k] + y.j[k] * s;
        for (std::size_t k = 0; k < r.jp.size(); ++k) r.jp[k] = r.jp[k] + y.jp[k] * s;
        return r;
    }
    // {x, y, z} = (x ybar) z + (z ybar) x - (z xbar) y
    Arr<R> triple(const Arr<R>& x, const Arr<R>& y, const Arr<R>& z) const {
        auto yb = bar(y), xb = bar(x);
        return lin(lin(mul(mul(x, yb), z), 1, mul(mul(z, yb), x)), -1, mul(mul(z, xb), y));
    }
    Arr<R> psi(const Arr<R>& x, const Arr<R>& y) const { return lin(mul(x, bar(y)), -1, mul(y, bar(x))); }

};

template <class R>
R chi_route(const AdmissibleTriple& t, const Arr<R>& x) {
    ArrOps<R> ops{t};
    const std::size_t dj = t.dim_j(), djp = t.dim_jp();
    Arr<R> s0{R(1), std::vector<R>(dj), std::vector<R>(djp), R(-1)};
    // s0^2 = mu 1 with mu = 1
    const Scalar mu = 1;
    auto sx = ops.mul(s0, x);
    auto v = ops.mul(ops.psi(ops.mul(s0, sx), ops.triple(x, sx, x)), s0);
    // chi(u, w) = (2 / mu) psi(s0 u, w) s0, N_A = chi(s0 x, {x, s0 x, x}) / (12 mu)
    return v.a * (Scalar(2) / (Scalar(12) * mu * mu));
}

}  // namespace

VerificationReport structurable_cross_check(const AdmissibleTriple& t, const VerifyOptions& opts) {
    ConstructedForm q = structurable_quartic(t);
    const std::size_t dj = t.dim_j(), djp = t.dim_jp(), n = q.form.dim;
    const std::string id = "closed quartic formula = chi(s0 x, {x, s0 x, x}) / (12 mu)";
    if (opts.mode == VerifyMode::Random) {
        auto lhs = [&](const std::vector<Scalar>& p) -> std::optional<Scalar> { return q.form(p); };
        auto rhs = [&](const std::vector<Scalar>& p) -> std::optional<Scalar> {
            Arr<Scalar> x{p[0], std::vector<Scalar>(p.begin() + 1, p.begin() + 1 + static_cast<std::ptrdiff_t>(dj)),
                          std::vector<Scalar>(p.begin() + 1 + static_cast<std::ptrdiff_t>(dj), p.end() - 1), p[n - 1]};
            return chi_route(t, x);
        };
        return verify_by_evaluation(n, 4, lhs, rhs, opts.samples, opts.seed, id);
    }
    Arr<Polynomial> x{Polynomial::variable(n, 0), vars(n, 1, dj), vars(n, 1 + dj, djp), Polynomial::variable(n, n - 1)};
    return verify_identity(q.form.body, chi_route(t, x), opts, id);
}

ConstructedForm cayley_dickson_quartic(const AlgebraPresentation& B, const Scalar& mu) {
    if (mu.is_zero()) throw InvalidArgument("mu must be nonzero");
    if (!B.norm || B.norm->degree != 4) throw InvalidArgument("algebra needs a quartic norm");
    if (!B.trace) throw InvalidArgument("algebra needs a trace");
    const std::size_t m = B.dim, n = 2 * m;
    auto b1 = B.generic(n, 0), b2 = B.generic(n, m);
    auto t = [&](const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
        auto p = B.multiply(x, y);
        Polynomial s(n);
        for (std::size_t k = 0; k < m; ++k)
            if (!(*B.trace)[k].is_zero()) s += p[k] * (*B.trace)[k];
        return s;
    };
    const Polynomial& Q = B.norm->body;
    Polynomial body = Q.shifted(n, 0) + Q.shifted(n, m) * (mu * mu) + t(B.triple(b1, b2), b2) * (mu / Scalar(2)) -
                      t(b1, b2).pow(2) * (mu / Scalar(4));
    ConstructedForm f;
    f.kind = "cayley-dickson";
    f.params = {{"algebra", B.name}, {"mu", mu.to_string()}};
    f.form = HomogeneousForm(join_fields(B.field, mu.field()), 4, n, body);
    f.algebra = B;
    return f;
}

Matrix<Scalar> quartic_theta(const AlgebraPresentation& B) {
    if (!B.trace) throw InvalidArgument("algebra needs a trace");
    Matrix<Scalar> th(B.dim, B.dim);
    for (std::size_t k = 0; k < B.dim; ++k)
        for (std::size_t l = 0; l < B.dim; ++l)
            th(k, l) = B.unit[k] * (*B.trace)[l] / Scalar(2) - Scalar(k == l ? 1 : 0);
    return th;
}

ConstructedForm power_form(const ConstructedForm& phi1, unsigned m) {
    if (m == 0) throw InvalidArgument("power must be positive");
    ConstructedForm f;
    f.kind = "power";
    f.params = {{"base", phi1.kind}, {"m", std::to_string(m)}};
    f.form = HomogeneousForm(phi1.form.field, phi1.form.degree * m, phi1.form.dim, phi1.form.body.pow(m));
    std::optional<ScaledWitness> w = phi1.witness;
    std::string role = phi1.witness_role;
    if (!w && phi1.composition) {
        w = witness_from_composition(phi1.form, *phi1.composition);
        role = "strong-mult";
    }
    if (w) {
        f.witness = ScaledWitness{w->x_vars, w->c.pow(static_cast<int>(m)), w->M};
        f.witness_role = role;
    }
    return f;
}

ConstructedForm scaled_block_sum(const ConstructedForm& phi, const std::vector<Scalar>& a) {
    if (!phi.similarity) throw MissingWitness(phi.kind + " carries no similarity family");
    if (a.empty()) throw InvalidArgument("block sum of no blocks");
    const std::size_t n = phi.form.dim, r = a.size(), N = n * r;
    Polynomial body(N);
    Field field = phi.form.field;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i].is_zero()) throw InvalidArgument("block scalars must be nonzero");
        body += phi.form.body.shifted(N, i * n) * a[i];
        field = join_fields(field, a[i].field());
    }
    ConstructedForm f;
    f.kind = "block-sum";
    f.params = {{"base", phi.kind}, {"a", join(a)}};
    f.form = HomogeneousForm(field, phi.form.degree, N, body);
    auto family = phi.similarity;
    f.similarity = [family, n, r](const RationalFunction& c) {
        Matrix<RationalFunction> M(n * r, n * r);
        auto S = family(c);
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M(b * n + i, b * n + j) = S(i, j);
        return M;
    };
    f.witness = ScaledWitness{N, generic_value(f.form), f.similarity(generic_value(f.form))};
    f.witness_role = "strong-mult";
    return f;
}

std::vector<ConstructedForm> catalog() {
    std::vector<ConstructedForm> out;
    out.push_back(diagonal(nullptr, 3, {1, 2, 3}));
    out.push_back(monomial({1, 2}));
    {
        auto h = hyperbolic_plane().form;
        HomogeneousForm z(nullptr, 1, 1, Polynomial::variable(1, 0));
        out.push_back(product_form({{h, 1}, {z, 1}}));
    }
    for (std::size_t d = 2; d <= 4; ++d) out.push_back(det_norm(d));
    out.push_back(composition_algebra_norm({-1}));
    out.push_back(composition_algebra_norm({-1, -1}));
    out.push_back(composition_algebra_norm({-1, -1, -1}));
    out.push_back(hyperbolic_plane());
    out.push_back(tits_cubic(1));
    out.push_back(tits_cubic(2));
    {
        auto phi0 = diagonal_form(nullptr, 2, {1, 2});
        out.push_back(norm_compose(EtaleAlgebra::extend(nullptr, {-5, 0, 1}), phi0));
        auto K = NumberField::create({1, 1, 1});
        out.push_back(norm_compose(EtaleAlgebra::extend(K, {-2, 0, 0, 1}), phi0));
    }
    out.push_back(split_albert_norm());
    out.push_back(structurable_quartic(jordan_triple_from_degree3(matrix_algebra(3), 1)));
    out.push_back(cayley_dickson_quartic(split_etale_algebra(4), 1));
    out.push_back(power_form(hyperbolic_plane(), 2));
    {
        ConstructedForm x;
        x.kind = "linear";
        x.form = HomogeneousForm(nullptr, 1, 1, Polynomial::variable(1, 0));
        x.witness = ScaledWitness{1, generic_value(x.form), to_rf(Matrix<Polynomial>(1, 1, {Polynomial::variable(1, 0)}))};
        x.witness_role = "strong-mult";
        out.push_back(power_form(x, 3));
    }
    out.push_back(scaled_block_sum(det_norm(3), {1, 2}));
    return out;
}

}  // namespace formforge
