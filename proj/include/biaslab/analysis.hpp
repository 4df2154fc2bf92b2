#pragma once

#include <optional>

#include "biaslab/agent.hpp"

namespace biaslab {

/// One evaluated theorem bound. `holds` is the exact comparison lhs <= rhs;
/// inapplicable bounds are reported, never silently dropped.
struct BoundEntry {
    std::string name;
    Rat lhs{0};
    Rat rhs{0};
    bool applicable = false;
    bool holds = false;
    bool lhs_infinite = false;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    bool all_applicable_hold() const;
    int applicable_count() const;
    int passed_count() const;
    const BoundEntry* find(std::string_view name) const;
};

/// Evaluates every bound against a finished trace:
///   LINEAR_K       ratio <= alpha * k          (Min, beta < 1, free agent)
///   CONSISTENT     ratio <= alpha / beta       (Min, beta < 1, nested plans)
///   MIN_OVER       ratio <= beta               (Min, beta > 1, exact)
///   MAX_UNDER      ratio <= 1 / beta           (Max, beta < 1, exact)
///   MAX_OVER_EXP   opt <= cost * beta^cost     (Max, beta > 1, exact)
///   MAX_OVER_LOG   opt <= (2*beta)^cost        (Max, beta > 1, exact; the
///                  log-free form of the (1+log beta) * opt / log opt bound)
///   DCOVER         ratio <= alpha * d * opt    (d-set-cover, beta < 1)
///   DHIT           ratio <= alpha * d! * ((alpha/beta) * opt)^d
///                                              (uniform d-hitting-set, beta < 1)
BoundReport bound_report(const AgentTrace& trace, const Instance& inst);

/// The minor structure a high-ratio minimization run certifies, with the
/// agent's replay on it. x-weights come from the committed pivots, y-weights
/// from the residual optima recorded in the trace.
struct MinorExtraction {
    Instance minor;       // the raw-family instance (see generators::jn)
    AgentTrace replay;    // unrestricted exact agent on `minor`
    std::vector<ElementSet> x_bundles;  // {x_i} per step
    std::vector<ElementSet> y_bundles;  // optimal residual solutions
    bool bundles_distinct = false;      // x_i != y_j for i < n (final step may collide)
};

/// Requires a Min trace with beta < 1 from the exact evaluator and a free
/// (not consistency-restricted) agent.
MinorExtraction extract_minor(const AgentTrace& trace, const Instance& inst);

struct Sunflower {
    std::vector<int> petals;  // indices into the input family
    ElementSet core;
};

/// Constructive sunflower search on a d-uniform family: greedily collect a
/// pairwise-disjoint subfamily; if it is short of k petals, recurse on the
/// link of the most frequent element and prepend it to the core. Guaranteed
/// to succeed when |family| > d!(k-1)^d; may also succeed below the
/// threshold. Throws on mixed set sizes.
std::optional<Sunflower> find_sunflower(const std::vector<ElementSet>& family, int k);

/// Independent re-validation of the Sunflower invariant: petals pairwise
/// distinct and every pairwise intersection equal to the core.
bool validate_sunflower(const std::vector<ElementSet>& family, const Sunflower& sf);

/// Step-count claim for hitting-set runs: p <= d! ((alpha/beta) opt)^d, plus
/// the private-set property of every step when the agent avoided
/// superfluous choices.
struct HitStepReport {
    Int steps{0};
    Rat step_bound{0};
    bool step_bound_holds = false;
    bool private_sets_checked = false;
    bool private_sets_ok = false;
};

HitStepReport dhit_step_bound(const AgentTrace& trace, const Instance& inst);

}  // namespace biaslab
