#pragma once

#include <cstdint>
#include <optional>

#include "biaslab/instance.hpp"

namespace biaslab {

/// Candidate families the per-step optimizer may be restricted to.
/// MinimalOnly keeps the agent from superfluous choices on minimization
/// tasks; MaximalOnly is the maximization analogue.
enum class Restriction { None, MinimalOnly, MaximalOnly };

std::string restriction_string(Restriction r);
Restriction restriction_from_string(std::string_view s);

/// Default restriction for an objective: MinimalOnly for Min, MaximalOnly
/// for Max.
Restriction default_restriction(Objective objective);

enum class EvalMode { Exact, AdversarialAlpha };

std::string eval_mode_string(EvalMode m);
EvalMode eval_mode_from_string(std::string_view s);

struct EvaluatorSpec {
    EvalMode mode = EvalMode::Exact;
    Rat alpha{1};  // window factor; must be 1 in Exact mode
    std::optional<Restriction> restriction;  // nullopt = default for the objective

    void validate() const;
};

/// One answer of a per-step optimizer: the solution it proposes, its exact
/// biased cost, and the pivot the agent would commit.
struct Evaluation {
    ElementSet solution;
    Rat biased_value{0};
    ElementId pivot = -1;
};

/// Exact optimizer of the biased cost over the (restricted) family of
/// nonempty feasible solutions of the remaining ground. Ties between
/// solutions are broken by smaller plain cost, then by position in the
/// size-then-lexicographic enumeration order. `within`, when set, restricts
/// candidates to subsets of the given element set (used by the
/// consistency-restricted agent).
///
/// Throws InfeasibleError when no candidate exists and SizeLimitError when
/// the remaining ground exceeds 24 elements (raw explicit families are
/// enumerated directly and exempt from the limit).
Evaluation exact_biased_optimum(const Instance& inst, const Bias& bias, Restriction restriction,
                                const std::optional<ElementSet>& within = std::nullopt);

/// Adversarial alpha-approximate optimizer: among all candidates whose
/// biased cost is within factor alpha of the exact biased optimum, returns
/// the one with the worst plain cost; remaining ties are resolved by a
/// seeded deterministic draw. With alpha = 1 this is bit-for-bit
/// exact_biased_optimum. The window factor is bias.alpha.
Evaluation adversarial_alpha(const Instance& inst, const Bias& bias, Restriction restriction,
                             std::uint64_t seed,
                             const std::optional<ElementSet>& within = std::nullopt);

/// Dispatch on an EvaluatorSpec.
Evaluation evaluate(const Instance& inst, const Bias& bias, const EvaluatorSpec& spec,
                    std::uint64_t seed, const std::optional<ElementSet>& within = std::nullopt);

struct OptResult {
    Int value{0};
    ElementSet witness;
};

/// Exact plain-cost optimum (the ratio denominator). The empty set counts
/// as a candidate when it is feasible. Witness ties follow the same order
/// as exact_biased_optimum.
OptResult exact_opt(const Instance& inst, Objective objective);

}  // namespace biaslab
