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

#include "formforge/identity.hpp"

#include <chrono>
#include <cstdlib>

#include "formforge/errors.hpp"

namespace formforge {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::Symbolic: return "symbolic";
        case VerifyMode::Random: return "random";
        case VerifyMode::Auto: return "auto";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::Refuted: return "refuted";
        case Verdict::Evidence: return "evidence";
    }
    return "?";
}

VerifyMode parse_mode(const std::string& s) {
    if (s == "symbolic") return VerifyMode::Symbolic;
    if (s == "random") return VerifyMode::Random;
    if (s == "auto") return VerifyMode::Auto;
    throw InvalidArgument("unknown mode '" + s + "'");
}

std::size_t term_budget_from_env() {
    const char* v = std::getenv("FORMFORGE_TERM_BUDGET");
    if (!v || !*v) return kDefaultTermBudget;
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end || n == 0) return kDefaultTermBudget;
    return static_cast<std::size_t>(n);
}

std::vector<Scalar> random_point(std::mt19937_64& gen, std::size_t n) {
    std::vector<Scalar> x;
    x.reserve(n);
    // 2^64 is a multiple of the box size, so masking is unbiased
    for (std::size_t i = 0; i < n; ++i)
        x.emplace_back(static_cast<long>(gen() & static_cast<std::uint64_t>(kBoxSize - 1)) - kBoxHalf);
    return x;
}

VerificationReport verify_identity(const Polynomial& lhs, const Polynomial& rhs,
                                   const VerifyOptions& opts, std::string identity) {
    const std::size_t n = std::max(lhs.nvars(), rhs.nvars());
    const unsigned deg = static_cast<unsigned>(std::max({lhs.total_degree(), rhs.total_degree(), 0}));
    if (opts.mode == VerifyMode::Random) {
        auto ev = [](const Polynomial& p) {
            return [q = &p](const std::vector<Scalar>& x) -> std::optional<Scalar> { return q->evaluate(x); };
        };
        return verify_by_evaluation(n, deg, ev(lhs), ev(rhs), opts.samples, opts.seed, std::move(identity));
    }
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.mode = VerifyMode::Symbolic;
    rep.degree = deg;
    Polynomial diff = lhs - rhs;
    rep.terms = diff.size();
    if (diff.is_zero()) {
        rep.verdict = Verdict::Proved;
    } else {
        rep.verdict = Verdict::Refuted;
        std::mt19937_64 gen(opts.seed);
        for (;;) {
            auto x = random_point(gen, n);
            if (!diff.evaluate(x).is_zero()) {
                rep.point = std::move(x);
                break;
            }
        }
    }
    rep.seconds = since(t0);
    return rep;
}

VerificationReport verify_by_evaluation(std::size_t nvars, unsigned degree, const Evaluator& lhs,
                                        const Evaluator& rhs, std::size_t samples,
                                        std::uint64_t seed, std::string identity) {
    if (samples == 0) throw InvalidArgument("random mode needs at least one sample");
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.mode = VerifyMode::Random;
    rep.seed = seed;
    rep.degree = degree;
    rep.per_sample_bound = Rational(degree, kBoxSize);
    rep.per_sample_bound.canonicalize();
    std::mt19937_64 gen(seed);
    std::size_t skipped = 0;
    for (std::size_t done = 0; done < samples;) {
        auto x = random_point(gen, nvars);
        auto a = lhs(x);
        auto b = rhs(x);
        if (!a || !b) {
            if (++skipped > 100 * samples + 1000) throw InvalidArgument("too many points hit a pole");
            continue;
        }
        ++done;
        rep.samples = done;
        if (*a != *b) {
            rep.verdict = Verdict::Refuted;
            rep.point = std::move(x);
            rep.seconds = since(t0);
            return rep;
        }
    }
    rep.verdict = Verdict::Evidence;
    if (skipped) rep.note = std::to_string(skipped) + " points skipped at poles";
    rep.seconds = since(t0);
    return rep;
}

}  // namespace formforge
