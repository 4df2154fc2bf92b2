#pragma once

#include "biaslab/evaluators.hpp"

namespace biaslab {

/// Free agents may plan each step from scratch; ForbidInconsistent keeps
/// every step's planned solution nested inside the previous one, so no
/// committed element is ever absent from an earlier plan. Only meaningful
/// for minimization runs.
enum class Consistency { Free, ForbidInconsistent };

std::string consistency_string(Consistency c);
Consistency consistency_from_string(std::string_view s);

struct AgentConfig {
    Bias bias;
    EvaluatorSpec evaluator;
    Consistency consistency = Consistency::Free;
    std::uint64_t seed = 0;

    Restriction effective_restriction() const {
        return evaluator.restriction.value_or(default_restriction(bias.objective));
    }
    void validate() const;
};

struct StepRecord {
    int step = 0;
    Evaluation evaluation;       // the S_k and its pivot x_k
    ElementSet committed_after;  // pivots committed through this step, in order
    Int residual_opt{0};         // exact plain optimum of the residual this step saw
};

struct AgentTrace {
    std::string instance_digest;
    AgentConfig config;
    std::vector<StepRecord> steps;
    ElementSet final_solution;
    Int final_cost{0};
    Int opt{0};
    Rat ratio{0};
    bool ratio_infinite = false;  // opt and cost disagree about being zero

    int step_count() const { return static_cast<int>(steps.size()); }
};

/// The inconsistent-planning loop: evaluate the biased optimum of the
/// current residual, commit its pivot, stop as soon as the committed set is
/// feasible (Min) or inclusion-wise maximal feasible (Max) for the original
/// instance. Identical inputs produce byte-identical traces.
AgentTrace run_agent(const Instance& inst, const AgentConfig& cfg);

/// final_cost / opt for Min, opt / final_cost for Max. Throws on the
/// infinite sentinel; callers that care inspect trace.ratio_infinite.
Rat cost_ratio(const AgentTrace& trace);

/// Same value as cost_ratio; the distinct name marks ratios produced under
/// an alpha-approximate evaluator in reports.
Rat alpha_cost_ratio(const AgentTrace& trace);

}  // namespace biaslab
