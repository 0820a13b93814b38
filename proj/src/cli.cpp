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

#include "formforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "formforge/json_io.hpp"

namespace formforge {

namespace {

constexpr int kUsage = 3, kBadJson = 4, kOther = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JsonSyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw JsonSyntaxError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& raw) {
    Params p;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + kv + "' is not key=value");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return p;
}

std::string get(const Params& p, const std::string& key, const std::string& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

std::vector<Rational> rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_rational(item));
    return out;
}

std::vector<Scalar> scalar_list(const std::string& s) {
    auto q = rational_list(s);
    return std::vector<Scalar>(q.begin(), q.end());
}

unsigned to_unsigned(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
    }
}

Field field_param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end() || it->second == "Q") return nullptr;
    return NumberField::create(rational_list(it->second));
}

ConstructedForm construct(const std::string& kind, const Params& p, const std::vector<std::string>& forms) {
    if (kind == "diagonal") {
        Field K = field_param(p, "field");
        std::vector<Scalar> a;
        for (const auto& q : rational_list(get(p, "a", "1"))) a.push_back(Scalar::from_rational(K, q));
        return diagonal(K, to_unsigned(get(p, "degree", "3"), "degree"), a);
    }
    if (kind == "monomial") {
        std::vector<unsigned> e;
        for (const auto& q : rational_list(get(p, "exponents", "1,2"))) e.push_back(to_unsigned(to_string(q), "exponent"));
        return monomial(e);
    }
    if (kind == "product") {
        if (forms.empty()) throw UsageError("product needs --form for each factor");
        auto ex = rational_list(get(p, "exponents", ""));
        std::vector<std::pair<HomogeneousForm, unsigned>> f;
        for (std::size_t i = 0; i < forms.size(); ++i)
            f.emplace_back(form_from_json(read_json(forms[i])), i < ex.size() ? to_unsigned(to_string(ex[i]), "exponent") : 1u);
        return product_form(f);
    }
    if (kind == "norm-compose") {
        Field K = field_param(p, "base");
        auto A = EtaleAlgebra::extend(K, [&] {
            std::vector<Scalar> f;
            for (const auto& q : rational_list(get(p, "minpoly", "-5,0,1"))) f.push_back(Scalar::from_rational(K, q));
            return f;
        }());
        HomogeneousForm phi0 = forms.empty() ? diagonal_form(nullptr, to_unsigned(get(p, "degree0", "2"), "degree0"),
                                                             scalar_list(get(p, "a", "1,2")))
                                             : form_from_json(read_json(forms[0]));
        return norm_compose(A, phi0);
    }
    if (kind == "det") return det_norm(to_unsigned(get(p, "d", "2"), "d"));
    if (kind == "pfister") return composition_algebra_norm(scalar_list(get(p, "a", "-1")));
    if (kind == "hyperbolic") return hyperbolic_plane();
    if (kind == "tits-cubic") return tits_cubic(parse_rational(get(p, "a", "1")));
    if (kind == "albert") return split_albert_norm();
    if (kind == "structurable") {
        std::string alg = get(p, "algebra", "M3");
        AlgebraPresentation J;
        if (alg == "M3") J = matrix_algebra(3);
        else if (alg == "diag3") J = split_etale_algebra(3);
        else throw UsageError("structurable algebra must be M3 or diag3");
        return structurable_quartic(jordan_triple_from_degree3(J, parse_rational(get(p, "zeta", "1"))));
    }
    if (kind == "cayley-dickson") return cayley_dickson_quartic(split_etale_algebra(4), parse_rational(get(p, "mu", "1")));
    if (kind == "power") {
        unsigned m = to_unsigned(get(p, "m", "2"), "m");
        if (!forms.empty()) return power_form(constructed_from_json(read_json(forms[0])), m);
        return power_form(construct(get(p, "base", "hyperbolic"), p, {}), m);
    }
    if (kind == "block-sum") {
        std::string base = get(p, "base", "det");
        if (base != "det") throw MissingWitness("no similarity family for base '" + base + "'");
        return scaled_block_sum(det_norm(to_unsigned(get(p, "d", "3"), "d")), scalar_list(get(p, "a", "1,2")));
    }
    throw UsageError("unknown kind '" + kind + "'");
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::Proved: return 0;
        case Verdict::Refuted: return 1;
        case Verdict::Evidence: return 2;
    }
    return kOther;
}

Matrix<RationalFunction> witness_matrix(const json& w, const HomogeneousForm& phi) {
    if (w.contains("witness")) return witness_from_json(w["witness"], phi.field, "/witness").M;
    if (w.contains("M")) return witness_from_json(w, phi.field).M;
    if (w.contains("composition")) return witness_from_composition(phi, bilinear_from_json(w["composition"], phi.field, "/composition")).M;
    if (w.contains("z")) return witness_from_composition(phi, bilinear_from_json(w, phi.field)).M;
    throw ParseError("at /: witness needs \"M\", \"z\", \"witness\" or \"composition\"");
}

struct VerifyArgs {
    std::string kind, form, witness, mode = "auto";
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    bool seed_given = false, timing = false;
    unsigned s = 0;
    std::string a, mu;
};

int verify(const VerifyArgs& v, std::ostream& out) {
    VerifyOptions o;
    o.mode = parse_mode(v.mode);
    if (o.mode == VerifyMode::Random && !v.seed_given) throw UsageError("--seed is required with --mode random");
    o.samples = v.samples;
    o.seed = v.seed;
    o.term_budget = term_budget_from_env();
    json fj = read_json(v.form);
    HomogeneousForm phi = form_from_json(fj);
    // a constructed form carries its own witness
    json w = v.witness.empty() ? fj : read_json(v.witness);
    auto param = [&](const std::string& flag, const char* key, const std::string& fallback) {
        if (!flag.empty()) return flag;
        if (w.contains(key)) return w[key].is_string() ? w[key].get<std::string>() : w[key].dump();
        return fallback;
    };
    VerificationReport r;
    if (v.kind == "composition") {
        json z = w.contains("composition") ? w["composition"] : w;
        r = verify_composition(phi, bilinear_from_json(z, phi.field), o);
    } else if (v.kind == "jordan") {
        r = verify_jordan_composition(phi, algebra_from_json(w.contains("algebra") ? w["algebra"] : w), o);
    } else if (v.kind == "strong-mult") {
        r = verify_strong_mult(phi, witness_matrix(w, phi), o);
    } else if (v.kind == "strong-jordan") {
        r = verify_strong_jordan(phi, witness_matrix(w, phi), o);
    } else if (v.kind == "exponent") {
        std::string s = v.s ? std::to_string(v.s) : param("", "s", "");
        if (s.empty()) throw UsageError("exponent verification needs --s");
        r = verify_exponent(phi, witness_matrix(w, phi), to_unsigned(s, "s"), o);
    } else if (v.kind == "similarity") {
        std::string a = param(v.a, "a", "");
        if (a.empty()) throw UsageError("similarity verification needs --a");
        r = verify_similarity(phi, witness_matrix(w, phi), Scalar::from_rational(phi.field, parse_rational(a)), o);
    } else if (v.kind == "twist") {
        std::string mu = param(v.mu, "mu", "");
        if (mu.empty()) throw UsageError("twist verification needs --mu");
        unsigned s = v.s ? v.s : to_unsigned(param("", "s", "1"), "s");
        r = verify_mu_twist(phi, witness_matrix(w, phi), Scalar::from_rational(phi.field, parse_rational(mu)), s, o);
    } else if (v.kind == "scaled") {
        ScaledWitness sw = witness_from_json(w.contains("witness") ? w["witness"] : w, phi.field);
        r = verify_scaled_witness(phi, sw, o);
    } else {
        throw UsageError("unknown verification '" + v.kind + "'");
    }
    out << to_json(r, v.timing).dump(2) << "\n";
    return verdict_code(r.verdict);
}

json catalog_summary(const ConstructedForm& f) {
    json params = json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    json s = {{"kind", f.kind}, {"params", params}, {"degree", f.form.degree}, {"vars", f.form.dim},
              {"field", to_json(f.form.field)}, {"terms", f.form.body.size()}};
    if (f.witness) s["witness"] = f.witness_role;
    if (f.composition) s["composition"] = true;
    if (f.algebra) s["algebra"] = f.algebra->name;
    return s;
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    app.require_subcommand(1);

    std::string kind;
    std::vector<std::string> raw_params, forms;
    auto* c = app.add_subcommand("construct", "build a form from the catalog of constructions");
    c->add_option("--kind", kind, "construction kind")->required();
    c->add_option("--param", raw_params, "key=value parameter");
    c->add_option("--form", forms, "input form or constructed form JSON");

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "verify a multiplicativity identity");
    v->add_option("kind", va.kind,
                  "composition|jordan|strong-mult|strong-jordan|exponent|similarity|twist|scaled")
        ->required();
    v->add_option("--form", va.form, "form JSON")->required();
    v->add_option("--witness", va.witness, "witness JSON (default: the form file)");
    v->add_option("--mode", va.mode, "symbolic|random|auto");
    v->add_option("--samples", va.samples, "random samples");
    auto* seed = v->add_option("--seed", va.seed, "random seed");
    v->add_option("--s", va.s, "exponent");
    v->add_option("--a", va.a, "similarity factor");
    v->add_option("--mu", va.mu, "twist scalar");
    v->add_flag("--timing", va.timing, "include wall time");

    std::string form_path;
    auto* ob = app.add_subcommand("obstruct", "look for a decomposition obstruction to strong multiplicativity");
    ob->add_option("--form", form_path, "form JSON")->required();
    auto* de = app.add_subcommand("decompose", "orthogonal decomposition into indecomposables");
    de->add_option("--form", form_path, "form JSON")->required();
    std::string method = "alternating";
    auto* po = app.add_subcommand("polarize", "symmetric multilinear form of a form");
    po->add_option("--form", form_path, "form JSON")->required();
    po->add_option("--method", method, "alternating|multinomial");
    auto* ra = app.add_subcommand("radical", "radical of a form");
    ra->add_option("--form", form_path, "form JSON")->required();
    unsigned d = 0, s = 0;
    auto* ex = app.add_subcommand("exponent", "reduce a multiplicativity exponent");
    ex->add_option("--degree", d, "degree d")->required();
    ex->add_option("--exponent", s, "exponent s")->required();
    bool full = false;
    auto* ca = app.add_subcommand("catalog", "list built-in constructions");
    ca->add_flag("--full", full, "emit complete constructed forms");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    if (c->parsed()) {
        out << to_json(construct(kind, parse_params(raw_params), forms)).dump(2) << "\n";
        return 0;
    }
    if (v->parsed()) {
        va.seed_given = seed->count() > 0;
        return verify(va, out);
    }
    if (ob->parsed()) {
        auto r = krull_schmidt_obstruction(form_from_json(read_json(form_path)));
        out << to_json(r).dump(2) << "\n";
        return r.obstructed ? 1 : 2;
    }
    if (de->parsed()) {
        auto phi = form_from_json(read_json(form_path));
        auto dec = krull_schmidt_decompose(phi);
        json j = to_json(dec);
        j["reconstruction"] = reconstruction_holds(phi, dec);
        j["absolutely_indecomposable"] = is_absolutely_indecomposable(phi);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (po->parsed()) {
        auto phi = form_from_json(read_json(form_path));
        SymmetricTensor t;
        if (method == "alternating") t = polarize_alternating(phi);
        else if (method == "multinomial") t = polarize_multinomial(phi);
        else throw UsageError("unknown method '" + method + "'");
        out << to_json(t).dump(2) << "\n";
        return 0;
    }
    if (ra->parsed()) {
        auto rad = radical(form_from_json(read_json(form_path)));
        json vecs = json::array();
        for (const auto& r : rad) {
            json one = json::array();
            for (const auto& x : r) one.push_back(to_json(x));
            vecs.push_back(one);
        }
        out << json{{"radical", vecs}, {"nondegenerate", rad.empty()}}.dump(2) << "\n";
        return 0;
    }
    if (ex->parsed()) {
        auto r = reduce_exponent(d, s);
        out << json{{"e", r.e}, {"implies_strong", r.implies_strong}}.dump(2) << "\n";
        return r.implies_strong ? 0 : 1;
    }
    if (ca->parsed()) {
        json list = json::array();
        for (const auto& f : catalog()) list.push_back(full ? to_json(f) : catalog_summary(f));
        out << list.dump(2) << "\n";
        return 0;
    }
    return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"formforge: homogeneous forms, their decompositions and multiplicativity witnesses", "formforge"};
    try {
        return dispatch(app, args, out, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const JsonSyntaxError& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kBadJson;
    } catch (const ParseError& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kBadJson;
    } catch (const json::exception& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kBadJson;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kOther;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kOther;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace formforge
