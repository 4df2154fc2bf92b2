#include "biaslab/agent.hpp"

#include <algorithm>

namespace biaslab {

std::string consistency_string(Consistency c) {
    return c == Consistency::Free ? "free" : "forbid_inconsistent";
}

Consistency consistency_from_string(std::string_view s) {
    if (s == "free") return Consistency::Free;
    if (s == "forbid_inconsistent") return Consistency::ForbidInconsistent;
    throw ParseError("unknown consistency: '" + std::string(s) + "'");
}

void AgentConfig::validate() const {
    bias.validate();
    evaluator.validate();
    if (evaluator.alpha != bias.alpha) {
        throw InvalidInstanceError("evaluator alpha and bias alpha must agree");
    }
    if (consistency == Consistency::ForbidInconsistent && bias.objective == Objective::Max) {
        throw InvalidInstanceError(
            "the consistency restriction is defined for minimization runs only");
    }
}

namespace {

bool stop_condition(const Instance& original, const ElementSet& committed, Objective obj) {
    return obj == Objective::Min ? is_feasible(original, committed)
                                 : is_maximal_feasible(original, committed);
}

Rat make_ratio(const Int& num, const Int& den, bool* infinite) {
    *infinite = false;
    if (den == 0) {
        if (num == 0) return Rat{1};
        *infinite = true;
        return Rat{0};
    }
    return Rat(num, den);
}

}  // namespace

AgentTrace run_agent(const Instance& inst, const AgentConfig& cfg) {
    inst.validate();
    cfg.validate();
    if (!inst.committed.empty()) {
        throw InvalidInstanceError("run_agent expects an instance without committed elements");
    }
    const Objective obj = cfg.bias.objective;
    if (inst.kind != ProblemKind::Explicit && inst.natural_objective() != obj) {
        throw ModelViolationError("objective direction does not fit the problem kind");
    }
    // A minimization task must be completable at all; for the intensional and
    // auto-closed kinds that is exactly feasibility of the full ground set.
    if (obj == Objective::Min &&
        !(inst.kind == ProblemKind::Explicit && inst.closure == FamilyClosure::Raw)) {
        if (!is_feasible(inst, inst.remaining_ground())) {
            throw ModelViolationError("ground set is not feasible; the task cannot complete");
        }
    }

    AgentTrace trace;
    trace.instance_digest = instance_digest(inst);
    trace.config = cfg;

    Instance current = inst;
    ElementSet committed_sorted;
    ElementSet committed_ordered;
    std::optional<ElementSet> within;

    while (!stop_condition(inst, committed_sorted, obj)) {
        const int k = trace.step_count();
        if (k >= inst.ground_size()) {
            throw InfeasibleError("agent exhausted the ground set without completing");
        }
        StepRecord rec;
        rec.step = k;
        rec.residual_opt = exact_opt(current, obj).value;
        rec.evaluation = evaluate(current, cfg.bias, cfg.evaluator, mix_seed(cfg.seed, k), within);

        const ElementId pivot = rec.evaluation.pivot;
        committed_ordered.push_back(pivot);
        committed_sorted.insert(
            std::lower_bound(committed_sorted.begin(), committed_sorted.end(), pivot), pivot);
        rec.committed_after = committed_ordered;
        trace.steps.push_back(std::move(rec));

        current = residual(current, pivot);
        if (cfg.consistency == Consistency::ForbidInconsistent) {
            ElementSet next;
            for (ElementId e : trace.steps.back().evaluation.solution) {
                if (e != pivot) next.push_back(e);
            }
            within = std::move(next);
        }
    }

    trace.final_solution = committed_sorted;
    trace.final_cost = plain_cost(inst, committed_sorted);
    trace.opt = exact_opt(inst, obj).value;
    if (obj == Objective::Min) {
        trace.ratio = make_ratio(trace.final_cost, trace.opt, &trace.ratio_infinite);
    } else {
        trace.ratio = make_ratio(trace.opt, trace.final_cost, &trace.ratio_infinite);
    }
    return trace;
}

Rat cost_ratio(const AgentTrace& trace) {
    if (trace.ratio_infinite) throw Error("cost ratio is infinite (zero optimum)");
    return trace.ratio;
}

Rat alpha_cost_ratio(const AgentTrace& trace) { return cost_ratio(trace); }

}  // namespace biaslab
