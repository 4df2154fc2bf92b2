#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biaslab/rational.hpp"

namespace biaslab {

enum class Objective { Min, Max };

std::string objective_string(Objective o);
Objective objective_from_string(std::string_view s);

/// Elements of an instance are dense 0-based ids. Solutions are sorted,
/// duplicate-free id lists.
using ElementId = int;
using ElementSet = std::vector<ElementId>;

/// Degree of present bias plus the run's objective direction and the
/// approximation factor of the evaluator the agent is assumed to use.
/// beta < 1 models underestimation of future costs, beta > 1 overestimation,
/// beta = 1 an unbiased agent.
struct Bias {
    Rat beta{1};
    Objective objective = Objective::Min;
    Rat alpha{1};

    void validate() const;
};

enum class ProblemKind { SetCover, HittingSet, IndependentSet, Knapsack, Explicit };
enum class FamilyClosure { Up, Raw };

std::string kind_string(ProblemKind k);
ProblemKind kind_from_string(std::string_view s);

/// A weighted ground set with a feasibility predicate over its subsets.
///
/// Feasibility is intensional (a problem kind plus parameters) or extensional
/// (an explicit family). Residual instances share the parent description and
/// record the removed elements in `committed`: a subset T of the remaining
/// ground is feasible in the residual iff T together with the committed
/// elements satisfies the kind's predicate (for raw explicit families, iff
/// T = S \ committed for some listed S).
struct Instance {
    ProblemKind kind = ProblemKind::Explicit;
    std::vector<Int> weights;  // one per ground element; all >= 0
    std::vector<std::string> labels;  // empty, or one per ground element

    // set_cover: `sets[i]` is what ground element i covers; `universe` is the
    //   number of points to cover.
    // hitting_set: ground elements are the points; `sets` is the family to
    //   hit; `universe` equals the ground size.
    int universe = 0;
    std::vector<ElementSet> sets;

    // independent_set
    std::vector<std::pair<int, int>> edges;

    // knapsack: `weights` holds the item values (they play the cost role);
    // `loads` is the separate capacity attribute.
    std::vector<Int> loads;
    Int capacity{0};

    // explicit
    std::vector<ElementSet> family;
    FamilyClosure closure = FamilyClosure::Up;

    std::vector<ElementId> committed;  // residualization history, in order

    int ground_size() const { return static_cast<int>(weights.size()); }
    bool is_committed(ElementId x) const;
    ElementSet remaining_ground() const;

    /// Min for cover/hitting/explicit, Max for independent set and knapsack.
    Objective natural_objective() const;

    /// Structural validation; throws InvalidInstanceError.
    void validate() const;
};

/// Exact integer sum of member weights. Throws InvalidSolutionError on an
/// unknown or committed element id.
Int plain_cost(const Instance& inst, const ElementSet& solution);

/// The element the biased agent perceives as the one to perform now: the one
/// extremizing w(x) + beta * (c(S) - w(x)) over pivot choices. For Min this
/// is the min-weight member when beta <= 1 and the max-weight member when
/// beta > 1; for Max the directions swap. Equal-weight ties go to the
/// smallest element id. Throws on empty solutions.
ElementId biased_pivot(const Instance& inst, const ElementSet& solution, const Bias& bias);

/// w(x*) + beta * (c(S) - w(x*)) with x* = biased_pivot(S). Empty solutions
/// cost 0 by convention (the agent never evaluates empty candidates).
Rat biased_cost(const Instance& inst, const ElementSet& solution, const Bias& bias);

/// The instance with x committed. Throws if x is unknown or already committed.
Instance residual(const Instance& inst, ElementId x);

/// Whether `solution` (a subset of the remaining ground) is feasible for the
/// (possibly residual) instance.
bool is_feasible(const Instance& inst, const ElementSet& solution);

/// Feasible, and no single-element removal stays feasible.
bool is_minimal_feasible(const Instance& inst, const ElementSet& solution);

/// Feasible, and no single-element addition from the remaining ground stays
/// feasible.
bool is_maximal_feasible(const Instance& inst, const ElementSet& solution);

struct ClosureReport {
    bool min_kind = false;
    bool upward_checked = false;
    bool upward_holds = false;
    bool residuals_solvable = false;
    // Witnesses of an upward-closure failure: a feasible set and an
    // infeasible superset.
    std::vector<std::pair<ElementSet, ElementSet>> counterexamples;
    std::string notice;

    bool ok() const {
        return !min_kind || (upward_holds && residuals_solvable);
    }
};

/// Exhaustive closure check. Requires ground size <= 20 (throws
/// SizeLimitError beyond that rather than truncating silently). For Max
/// kinds the upward check is skipped with a notice.
ClosureReport verify_closure(const Instance& inst);

/// Stable content digest (16 hex chars) of the full instance description.
std::string instance_digest(const Instance& inst);

}  // namespace biaslab
