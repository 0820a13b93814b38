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

#include "formforge/json_io.hpp"

namespace formforge {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

std::size_t count_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const json& array_at(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Field& f) {
    if (!f) return "Q";
    json mp = json::array();
    for (const auto& c : f->minpoly()) mp.push_back(to_json(c));
    return json{{"minpoly", mp}};
}

json to_json(const Scalar& s) {
    if (s.is_rational()) return to_json(s.rational());
    json a = json::array();
    for (const auto& c : s.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"e", m}, {"c", to_json(c)}});
    return {{"vars", p.nvars()}, {"terms", terms}};
}

json to_json(const RationalFunction& f) {
    if (f.is_polynomial() && f.den().constant_term().is_one()) return to_json(f.num());
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const HomogeneousForm& phi) {
    return {{"field", to_json(phi.field)}, {"degree", phi.degree}, {"vars", phi.dim}, {"body", to_json(phi.body)}};
}

json to_json(const Matrix<Scalar>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const Matrix<RationalFunction>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const SymmetricTensor& t) {
    json entries = json::array();
    for (const auto& [idx, v] : t.entries) {
        json one = json::array();
        for (auto i : idx) one.push_back(i + 1);
        entries.push_back({{"index", one}, {"value", to_json(v)}});
    }
    return {{"field", to_json(t.field)}, {"degree", t.degree}, {"dim", t.dim}, {"entries", entries}};
}

json to_json(const ScaledWitness& w) { return {{"x_vars", w.x_vars}, {"c", to_json(w.c)}, {"M", to_json(w.M)}}; }

json to_json(const BilinearMap& z) {
    json a = json::array();
    for (const auto& m : z.z) a.push_back(to_json(m));
    return {{"z", a}};
}

json to_json(const AlgebraPresentation& A) {
    json table = json::array();
    for (const auto& e : A.table) table.push_back({e.i + 1, e.j + 1, e.k + 1, to_json(e.c)});
    json unit = json::array();
    for (const auto& u : A.unit) unit.push_back(to_json(u));
    json out = {{"name", A.name}, {"field", to_json(A.field)}, {"dim", A.dim},
                {"table", table}, {"unit", unit},          {"special", A.special}};
    if (A.trace) {
        json t = json::array();
        for (const auto& x : *A.trace) t.push_back(to_json(x));
        out["trace"] = t;
    }
    if (A.involution) out["involution"] = to_json(*A.involution);
    if (A.norm) out["norm"] = to_json(*A.norm);
    return out;
}

json to_json(const ConstructedForm& f) {
    json params = json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    json out = {{"kind", f.kind}, {"params", params}, {"form", to_json(f.form)}};
    if (f.witness) {
        out["witness"] = to_json(*f.witness);
        out["witness"]["role"] = f.witness_role;
    }
    if (f.composition) out["composition"] = to_json(*f.composition);
    if (f.algebra) out["algebra"] = to_json(*f.algebra);
    if (f.sharp) {
        json s = json::array();
        for (const auto& p : *f.sharp) s.push_back(to_json(p));
        out["sharp"] = s;
    }
    return out;
}

json to_json(const VerificationReport& r, bool timing) {
    json out = {{"verdict", to_string(r.verdict)}, {"mode", to_string(r.mode)}, {"identity", r.identity},
                {"degree", r.degree}};
    if (r.mode == VerifyMode::Random) {
        out["samples"] = r.samples;
        out["seed"] = r.seed;
        out["per_sample_bound"] = to_json(r.per_sample_bound);
    } else {
        out["terms"] = r.terms;
    }
    if (r.refuted()) {
        json p = json::array();
        for (const auto& x : r.point) p.push_back(to_json(x));
        out["point"] = p;
    }
    if (!r.note.empty()) out["note"] = r.note;
    if (timing) out["seconds"] = r.seconds;
    return out;
}

json to_json(const Decomposition& d) {
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back({{"dim", c.basis.cols()}, {"basis", to_json(c.basis)}, {"form", to_json(c.form)}});
    json idem = json::array();
    for (const auto& e : d.idempotents) idem.push_back(to_json(e));
    return {{"center_dim", d.center_dim},
            {"semisimple_dim", d.semisimple_dim},
            {"components", comps},
            {"change_of_basis", to_json(d.change_of_basis())},
            {"idempotents", idem}};
}

json to_json(const ObstructionReport& r) {
    return {{"verdict", r.obstructed ? "obstructed" : "consistent-unknown"},
            {"reasons", r.reasons},
            {"dimensions", r.dimensions},
            {"constraints", r.constraints},
            {"power_tests", r.power_tests},
            {"decomposition", to_json(r.decomposition)}};
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(where, "expected a rational as a string or integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Field field_from_json(const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "Q") return nullptr;
    const json& mp = array_at(member(j, "minpoly", where), at(where, "minpoly"));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < mp.size(); ++i) c.push_back(rational_from_json(mp[i], at(at(where, "minpoly"), i)));
    try {
        return NumberField::create(c);
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Scalar scalar_from_json(const json& j, const Field& field, const std::string& where) {
    if (!j.is_array()) return Scalar::from_rational(field, rational_from_json(j, where));
    if (!field) fail(where, "field element given over Q");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(where, i)));
    if (c.size() > field->degree()) fail(where, "too many coordinates for the field");
    c.resize(field->degree(), Rational(0));
    return Scalar(field, c);
}

Polynomial polynomial_from_json(const json& j, const Field& field, const std::string& where) {
    if (!j.is_object()) return Polynomial(scalar_from_json(j, field, where));
    const std::size_t n = count_from_json(member(j, "vars", where), at(where, "vars"));
    const json& terms = array_at(member(j, "terms", where), at(where, "terms"));
    std::vector<Polynomial::Term> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string w = at(at(where, "terms"), t);
        const json& e = array_at(member(terms[t], "e", w), at(w, "e"));
        if (e.size() != n) fail(at(w, "e"), "exponent vector length differs from vars");
        Monomial m;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t v = count_from_json(e[i], at(at(w, "e"), i));
            if (v > 60000) fail(at(at(w, "e"), i), "exponent too large");
            m.push_back(static_cast<std::uint16_t>(v));
        }
        out.emplace_back(std::move(m), scalar_from_json(member(terms[t], "c", w), field, at(w, "c")));
    }
    return Polynomial::from_terms(n, std::move(out));
}

RationalFunction rational_function_from_json(const json& j, const Field& field, const std::string& where) {
    if (j.is_object() && j.contains("num")) {
        Polynomial num = polynomial_from_json(j["num"], field, at(where, "num"));
        Polynomial den = polynomial_from_json(member(j, "den", where), field, at(where, "den"));
        if (den.is_zero()) fail(at(where, "den"), "zero denominator");
        return RationalFunction(num, den);
    }
    return RationalFunction(polynomial_from_json(j, field, where));
}

HomogeneousForm form_from_json(const json& j, const std::string& where) {
    if (j.is_object() && j.contains("form") && !j.contains("body")) return form_from_json(j["form"], at(where, "form"));
    Field field = j.is_object() && j.contains("field") ? field_from_json(j["field"], at(where, "field")) : nullptr;
    const std::size_t n = count_from_json(member(j, "vars", where), at(where, "vars"));
    Polynomial body = polynomial_from_json(member(j, "body", where), field, at(where, "body"));
    unsigned d = 0;
    if (j.contains("degree")) {
        d = static_cast<unsigned>(count_from_json(j["degree"], at(where, "degree")));
    } else if (auto h = body.homogeneous_degree()) {
        d = *h;
    } else {
        fail(at(where, "body"), "body is not homogeneous");
    }
    try {
        return HomogeneousForm(field, d, n, body);
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Matrix<Scalar> scalar_matrix_from_json(const json& j, const Field& field, const std::string& where) {
    array_at(j, where);
    const std::size_t r = j.size(), c = r ? array_at(j[0], at(where, 0)).size() : 0;
    Matrix<Scalar> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (array_at(j[i], at(where, i)).size() != c) fail(at(where, i), "ragged matrix");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k], field, at(at(where, i), k));
    }
    return m;
}

Matrix<RationalFunction> rf_matrix_from_json(const json& j, const Field& field, const std::string& where) {
    array_at(j, where);
    const std::size_t r = j.size(), c = r ? array_at(j[0], at(where, 0)).size() : 0;
    Matrix<RationalFunction> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (array_at(j[i], at(where, i)).size() != c) fail(at(where, i), "ragged matrix");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = rational_function_from_json(j[i][k], field, at(at(where, i), k));
    }
    return m;
}

ScaledWitness witness_from_json(const json& j, const Field& field, const std::string& where) {
    ScaledWitness w;
    w.M = rf_matrix_from_json(member(j, "M", where), field, at(where, "M"));
    if (j.contains("c")) w.c = rational_function_from_json(j["c"], field, at(where, "c"));
    if (j.contains("x_vars")) {
        w.x_vars = count_from_json(j["x_vars"], at(where, "x_vars"));
    } else {
        for (const auto& f : w.M.entries()) w.x_vars = std::max(w.x_vars, f.nvars());
        w.x_vars = std::max(w.x_vars, w.c.nvars());
    }
    return w;
}

BilinearMap bilinear_from_json(const json& j, const Field& field, const std::string& where) {
    const json& z = array_at(member(j, "z", where), at(where, "z"));
    BilinearMap out;
    for (std::size_t l = 0; l < z.size(); ++l)
        out.z.push_back(scalar_matrix_from_json(z[l], field, at(at(where, "z"), l)));
    return out;
}

AlgebraPresentation algebra_from_json(const json& j, const std::string& where) {
    AlgebraPresentation A;
    A.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
    A.field = j.contains("field") ? field_from_json(j["field"], at(where, "field")) : nullptr;
    A.dim = count_from_json(member(j, "dim", where), at(where, "dim"));
    const json& table = array_at(member(j, "table", where), at(where, "table"));
    for (std::size_t t = 0; t < table.size(); ++t) {
        const std::string w = at(at(where, "table"), t);
        if (!table[t].is_array() || table[t].size() != 4) fail(w, "expected [i, j, k, c]");
        std::uint16_t idx[3];
        for (int q = 0; q < 3; ++q) {
            std::size_t v = count_from_json(table[t][q], at(w, static_cast<std::size_t>(q)));
            if (v < 1 || v > A.dim) fail(at(w, static_cast<std::size_t>(q)), "index out of range (1-based)");
            idx[q] = static_cast<std::uint16_t>(v - 1);
        }
        A.table.push_back({idx[0], idx[1], idx[2], scalar_from_json(table[t][3], A.field, at(w, 3))});
    }
    const json& unit = array_at(member(j, "unit", where), at(where, "unit"));
    if (unit.size() != A.dim) fail(at(where, "unit"), "unit length differs from dim");
    for (std::size_t i = 0; i < unit.size(); ++i) A.unit.push_back(scalar_from_json(unit[i], A.field, at(at(where, "unit"), i)));
    A.special = j.value("special", false);
    if (j.contains("trace")) {
        const json& t = array_at(j["trace"], at(where, "trace"));
        std::vector<Scalar> tr;
        for (std::size_t i = 0; i < t.size(); ++i) tr.push_back(scalar_from_json(t[i], A.field, at(at(where, "trace"), i)));
        A.trace = tr;
    }
    if (j.contains("involution")) A.involution = scalar_matrix_from_json(j["involution"], A.field, at(where, "involution"));
    if (j.contains("norm")) A.norm = form_from_json(j["norm"], at(where, "norm"));
    return A;
}

ConstructedForm constructed_from_json(const json& j, const std::string& where) {
    ConstructedForm f;
    f.kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "form";
    f.form = form_from_json(j, where);
    if (j.contains("params") && j["params"].is_object())
        for (const auto& [k, v] : j["params"].items()) f.params.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    if (j.contains("witness")) {
        f.witness = witness_from_json(j["witness"], f.form.field, at(where, "witness"));
        f.witness_role = j["witness"].value("role", "");
    }
    if (j.contains("composition")) f.composition = bilinear_from_json(j["composition"], f.form.field, at(where, "composition"));
    if (j.contains("algebra")) f.algebra = algebra_from_json(j["algebra"], at(where, "algebra"));
    if (j.contains("sharp")) {
        const json& s = array_at(j["sharp"], at(where, "sharp"));
        std::vector<Polynomial> sh;
        for (std::size_t i = 0; i < s.size(); ++i) sh.push_back(polynomial_from_json(s[i], f.form.field, at(at(where, "sharp"), i)));
        f.sharp = sh;
    }
    return f;
}

}  // namespace formforge
