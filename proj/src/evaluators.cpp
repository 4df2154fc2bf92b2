#include "biaslab/evaluators.hpp"

#include <algorithm>
#include <random>

#include "mask_oracle.hpp"

namespace biaslab {

using detail::Mask;
using detail::MaskOracle;

std::string restriction_string(Restriction r) {
    switch (r) {
        case Restriction::None: return "none";
        case Restriction::MinimalOnly: return "minimal_only";
        case Restriction::MaximalOnly: return "maximal_only";
    }
    throw Error("unreachable restriction");
}

Restriction restriction_from_string(std::string_view s) {
    if (s == "none") return Restriction::None;
    if (s == "minimal_only") return Restriction::MinimalOnly;
    if (s == "maximal_only") return Restriction::MaximalOnly;
    throw ParseError("unknown restriction: '" + std::string(s) + "'");
}

Restriction default_restriction(Objective objective) {
    return objective == Objective::Min ? Restriction::MinimalOnly : Restriction::MaximalOnly;
}

std::string eval_mode_string(EvalMode m) {
    return m == EvalMode::Exact ? "exact" : "adversarial_alpha";
}

EvalMode eval_mode_from_string(std::string_view s) {
    if (s == "exact") return EvalMode::Exact;
    if (s == "adversarial_alpha") return EvalMode::AdversarialAlpha;
    throw ParseError("unknown evaluator mode: '" + std::string(s) + "'");
}

void EvaluatorSpec::validate() const {
    if (alpha < 1) throw InvalidInstanceError("alpha must be >= 1");
    if (mode == EvalMode::Exact && alpha != 1) {
        throw InvalidInstanceError("exact evaluator requires alpha = 1");
    }
}

namespace {

constexpr int kEnumerationLimit = 24;

struct Candidate {
    Mask mask = 0;
    Int plain{0};
    Int min_weight{0};
    ElementId min_id = -1;
    Int max_weight{0};
    ElementId max_id = -1;
};

bool passes_restriction(const MaskOracle& oracle, Restriction restriction, Mask mask) {
    switch (restriction) {
        case Restriction::None: return true;
        case Restriction::MinimalOnly: {
            Mask m = mask;
            while (m) {
                Mask b = m & (~m + 1);
                if (oracle.feasible(mask & ~b)) return false;
                m &= m - 1;
            }
            return true;
        }
        case Restriction::MaximalOnly: {
            Mask addable = oracle.remaining_mask() & ~mask;
            while (addable) {
                Mask b = addable & (~addable + 1);
                if (oracle.feasible(mask | b)) return false;
                addable &= addable - 1;
            }
            return true;
        }
    }
    return false;
}

Candidate candidate_of(const Instance& inst, Mask mask) {
    Candidate c;
    c.mask = mask;
    Mask m = mask;
    while (m) {
        int e = std::countr_zero(m);
        const Int& w = inst.weights[e];
        c.plain += w;
        if (c.min_id < 0 || w < c.min_weight) {
            c.min_weight = w;
            c.min_id = e;
        }
        if (c.max_id < 0 || w > c.max_weight) {
            c.max_weight = w;
            c.max_id = e;
        }
        m &= m - 1;
    }
    return c;
}

/// Visits every nonempty candidate solution of the (restricted) family over
/// `allowed` elements, in a deterministic order. Raw explicit families are
/// enumerated directly from the listed sets; everything else walks the
/// subset tree, cutting branches that cannot become feasible (upward-closed
/// kinds), extending only feasibly (downward-closed kinds), and stopping at
/// the minimal frontier when only minimal solutions are wanted.
template <typename Emit>
void enumerate_candidates(const MaskOracle& oracle, Restriction restriction, Mask allowed,
                          Emit&& emit) {
    const Instance& inst = oracle.instance();
    if (oracle.raw_family()) {
        for (Mask c : oracle.raw_candidates()) {
            if (c == 0 || (c & ~allowed) != 0) continue;
            if (!passes_restriction(oracle, restriction, c)) continue;
            emit(candidate_of(inst, c));
        }
        return;
    }

    ElementSet elems;
    {
        Mask m = allowed;
        while (m) {
            elems.push_back(std::countr_zero(m));
            m &= m - 1;
        }
    }
    if (static_cast<int>(elems.size()) > kEnumerationLimit) {
        throw SizeLimitError("candidate enumeration limited to 24 remaining elements");
    }
    const int count = static_cast<int>(elems.size());
    std::vector<Mask> suffix(count + 1, 0);
    for (int i = count - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | detail::bit_of(elems[i]);

    const bool up = oracle.monotone_up();
    const bool down = oracle.monotone_down();
    const bool minimal_cut = up && restriction == Restriction::MinimalOnly;

    // Each recursion node owns one subset; children extend it with larger ids.
    auto rec = [&](auto&& self, int start, const Candidate& cur, bool feasible) -> void {
        if (cur.mask != 0 && feasible && passes_restriction(oracle, restriction, cur.mask)) {
            emit(cur);
        }
        if (feasible && minimal_cut) return;  // supersets cannot be minimal
        for (int i = start; i < count; ++i) {
            if (up && !feasible && !oracle.feasible(cur.mask | suffix[i])) break;
            const ElementId e = elems[i];
            const Mask child_mask = cur.mask | detail::bit_of(e);
            if (down && !oracle.feasible(child_mask)) continue;
            Candidate child = cur;
            child.mask = child_mask;
            const Int& w = inst.weights[e];
            child.plain += w;
            if (child.min_id < 0 || w < child.min_weight) {
                child.min_weight = w;
                child.min_id = e;
            }
            if (child.max_id < 0 || w > child.max_weight) {
                child.max_weight = w;
                child.max_id = e;
            }
            const bool child_feasible = down || feasible || oracle.feasible(child_mask);
            self(self, i + 1, child, child_feasible);
        }
    };
    Candidate root;
    const bool root_feasible = oracle.feasible(0);
    if (down && !root_feasible) return;  // committed prefix already infeasible
    rec(rec, 0, root, root_feasible);
}

Mask allowed_mask(const Instance& inst, const MaskOracle& oracle,
                  const std::optional<ElementSet>& within) {
    Mask allowed = oracle.remaining_mask();
    if (within) {
        Mask w = 0;
        for (ElementId e : *within) {
            if (e < 0 || e >= inst.ground_size()) {
                throw InvalidSolutionError("within-filter id out of range");
            }
            w |= detail::bit_of(e);
        }
        allowed &= w;
    }
    return allowed;
}

struct BiasedScore {
    // Numerator of the biased cost over the fixed denominator den(beta);
    // comparisons between candidates reduce to integer comparisons.
    Int numerator{0};
    Int plain{0};
    int size = 0;
    Mask mask = 0;
    ElementId pivot = -1;
};

BiasedScore score_of(const Candidate& c, const Int& beta_num, const Int& beta_den,
                     bool pivot_is_min) {
    BiasedScore s;
    const Int& pw = pivot_is_min ? c.min_weight : c.max_weight;
    s.pivot = pivot_is_min ? c.min_id : c.max_id;
    s.numerator = beta_den * pw + beta_num * (c.plain - pw);
    s.plain = c.plain;
    s.size = std::popcount(c.mask);
    s.mask = c.mask;
    return s;
}

/// Tie chain of the optimizers: biased cost, then plain cost, then the
/// size-then-lexicographic enumeration position.
bool score_better(const BiasedScore& a, const BiasedScore& b, bool minimize) {
    if (a.numerator != b.numerator) {
        return minimize ? a.numerator < b.numerator : a.numerator > b.numerator;
    }
    if (a.plain != b.plain) return a.plain < b.plain;
    if (a.size != b.size) return a.size < b.size;
    return detail::lex_less(a.mask, b.mask);
}

}  // namespace

Evaluation exact_biased_optimum(const Instance& inst, const Bias& bias, Restriction restriction,
                                const std::optional<ElementSet>& within) {
    bias.validate();
    MaskOracle oracle(inst);
    const Mask allowed = allowed_mask(inst, oracle, within);
    const Int beta_num = numerator(bias.beta);
    const Int beta_den = denominator(bias.beta);
    const bool pivot_is_min = (bias.objective == Objective::Min) == (bias.beta <= 1);
    const bool minimize = bias.objective == Objective::Min;

    bool have = false;
    BiasedScore best;
    enumerate_candidates(oracle, restriction, allowed, [&](const Candidate& c) {
        BiasedScore s = score_of(c, beta_num, beta_den, pivot_is_min);
        if (!have || score_better(s, best, minimize)) {
            best = s;
            have = true;
        }
    });
    if (!have) throw InfeasibleError("no feasible candidate solution");
    Evaluation ev;
    ev.solution = detail::set_of(best.mask);
    ev.biased_value = Rat(best.numerator, beta_den);
    ev.pivot = best.pivot;
    return ev;
}

Evaluation adversarial_alpha(const Instance& inst, const Bias& bias, Restriction restriction,
                             std::uint64_t seed, const std::optional<ElementSet>& within) {
    bias.validate();
    if (bias.alpha == 1) return exact_biased_optimum(inst, bias, restriction, within);

    MaskOracle oracle(inst);
    const Mask allowed = allowed_mask(inst, oracle, within);
    const Int beta_num = numerator(bias.beta);
    const Int beta_den = denominator(bias.beta);
    const Int alpha_num = numerator(bias.alpha);
    const Int alpha_den = denominator(bias.alpha);
    const bool pivot_is_min = (bias.objective == Objective::Min) == (bias.beta <= 1);
    const bool minimize = bias.objective == Objective::Min;

    // Pass 1: the exact optimum anchors the window.
    bool have = false;
    BiasedScore best;
    enumerate_candidates(oracle, restriction, allowed, [&](const Candidate& c) {
        BiasedScore s = score_of(c, beta_num, beta_den, pivot_is_min);
        if (!have || score_better(s, best, minimize)) {
            best = s;
            have = true;
        }
    });
    if (!have) throw InfeasibleError("no feasible candidate solution");

    // Pass 2: among candidates within the alpha window, keep the worst plain
    // cost; remaining ties are drawn uniformly from a seeded generator.
    std::mt19937_64 rng(seed);
    bool picked = false;
    BiasedScore worst;
    std::uint64_t tie_count = 0;
    enumerate_candidates(oracle, restriction, allowed, [&](const Candidate& c) {
        BiasedScore s = score_of(c, beta_num, beta_den, pivot_is_min);
        const bool in_window = minimize
                                   ? alpha_den * s.numerator <= alpha_num * best.numerator
                                   : alpha_num * s.numerator >= alpha_den * best.numerator;
        if (!in_window) return;
        const bool strictly_worse =
            !picked || (minimize ? s.plain > worst.plain : s.plain < worst.plain);
        if (strictly_worse) {
            worst = s;
            picked = true;
            tie_count = 1;
        } else if (s.plain == worst.plain) {
            ++tie_count;
            if (rng() % tie_count == 0) worst = s;
        }
    });
    Evaluation ev;
    ev.solution = detail::set_of(worst.mask);
    ev.biased_value = Rat(worst.numerator, beta_den);
    ev.pivot = worst.pivot;
    return ev;
}

Evaluation evaluate(const Instance& inst, const Bias& bias, const EvaluatorSpec& spec,
                    std::uint64_t seed, const std::optional<ElementSet>& within) {
    spec.validate();
    if (spec.alpha != bias.alpha) {
        throw InvalidInstanceError("evaluator alpha and bias alpha must agree");
    }
    const Restriction r = spec.restriction.value_or(default_restriction(bias.objective));
    if (spec.mode == EvalMode::Exact) return exact_biased_optimum(inst, bias, r, within);
    return adversarial_alpha(inst, bias, r, seed, within);
}

OptResult exact_opt(const Instance& inst, Objective objective) {
    MaskOracle oracle(inst);
    const bool minimize = objective == Objective::Min;
    if (minimize && oracle.feasible(0)) return {Int{0}, {}};

    // For minimization every optimum is attained on a minimal solution and
    // the (plain, size, lex) order always prefers the minimal one, so the
    // minimal frontier is enough. Maximization needs the full feasible
    // family: zero-weight padding can tie and the order prefers fewer
    // elements.
    Restriction restriction = Restriction::None;
    if (minimize && !oracle.raw_family()) restriction = Restriction::MinimalOnly;

    bool have = false;
    Candidate best;
    int best_size = 0;
    auto better = [&](const Candidate& c, int size) {
        if (!have) return true;
        if (c.plain != best.plain) return minimize ? c.plain < best.plain : c.plain > best.plain;
        if (size != best_size) return size < best_size;
        return detail::lex_less(c.mask, best.mask);
    };
    enumerate_candidates(oracle, restriction, oracle.remaining_mask(), [&](const Candidate& c) {
        const int size = std::popcount(c.mask);
        if (better(c, size)) {
            best = c;
            best_size = size;
            have = true;
        }
    });
    if (!minimize && oracle.feasible(0)) {
        Candidate empty;
        if (better(empty, 0)) {
            best = empty;
            best_size = 0;
            have = true;
        }
    }
    if (!have) throw InfeasibleError("instance admits no feasible solution");
    return {best.plain, detail::set_of(best.mask)};
}

}  // namespace biaslab
