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

#ifndef FORMFORGE_IDENTITY_HPP
#define FORMFORGE_IDENTITY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "formforge/polynomial.hpp"

namespace formforge {

enum class VerifyMode { Symbolic, Random, Auto };
enum class Verdict { Proved, Refuted, Evidence };

std::string to_string(VerifyMode m);
std::string to_string(Verdict v);
VerifyMode parse_mode(const std::string& s);

inline constexpr std::size_t kDefaultTermBudget = 5'000'000;
// Random coordinates are drawn from [-kBoxHalf, kBoxHalf).
inline constexpr long kBoxHalf = 32768;
inline constexpr long kBoxSize = 2 * kBoxHalf;

// FORMFORGE_TERM_BUDGET if set and valid, else the default.
std::size_t term_budget_from_env();

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Auto;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::size_t term_budget = kDefaultTermBudget;
};

struct VerificationReport {
    Verdict verdict = Verdict::Proved;
    VerifyMode mode = VerifyMode::Symbolic;  // the mode actually run
    std::string identity;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    unsigned degree = 0;
    // Schwartz-Zippel bound on a false pass per sample: degree / box size.
    Rational per_sample_bound = 0;
    std::vector<Scalar> point;  // set when refuted
    std::size_t terms = 0;      // size of the expanded difference (symbolic)
    double seconds = 0;
    std::string note;

    bool proved() const { return verdict == Verdict::Proved; }
    bool refuted() const { return verdict == Verdict::Refuted; }
};

std::vector<Scalar> random_point(std::mt19937_64& gen, std::size_t n);

// lhs == rhs. Symbolic (and Auto, since both sides are already expanded)
// subtracts canonically; Random evaluates at seeded points.
VerificationReport verify_identity(const Polynomial& lhs, const Polynomial& rhs,
                                   const VerifyOptions& opts, std::string identity = {});

// Either side may decline a point (a pole) by returning nullopt; such points
// are redrawn.
using Evaluator = std::function<std::optional<Scalar>(const std::vector<Scalar>&)>;

VerificationReport verify_by_evaluation(std::size_t nvars, unsigned degree, const Evaluator& lhs,
                                        const Evaluator& rhs, std::size_t samples,
                                        std::uint64_t seed, std::string identity = {});

}  // namespace formforge

#endif
