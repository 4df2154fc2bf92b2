#include "biaslab/instance.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "mask_oracle.hpp"

namespace biaslab {

using detail::Mask;
using detail::MaskOracle;

std::string objective_string(Objective o) {
    return o == Objective::Min ? "min" : "max";
}

Objective objective_from_string(std::string_view s) {
    if (s == "min") return Objective::Min;
    if (s == "max") return Objective::Max;
    throw ParseError("unknown objective: '" + std::string(s) + "'");
}

void Bias::validate() const {
    if (beta <= 0) throw InvalidInstanceError("beta must be positive");
    if (alpha < 1) throw InvalidInstanceError("alpha must be >= 1");
}

std::string kind_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::SetCover: return "set_cover";
        case ProblemKind::HittingSet: return "hitting_set";
        case ProblemKind::IndependentSet: return "independent_set";
        case ProblemKind::Knapsack: return "knapsack";
        case ProblemKind::Explicit: return "explicit";
    }
    throw Error("unreachable kind");
}

ProblemKind kind_from_string(std::string_view s) {
    if (s == "set_cover") return ProblemKind::SetCover;
    if (s == "hitting_set") return ProblemKind::HittingSet;
    if (s == "independent_set") return ProblemKind::IndependentSet;
    if (s == "knapsack") return ProblemKind::Knapsack;
    if (s == "explicit") return ProblemKind::Explicit;
    throw ParseError("unknown problem kind: '" + std::string(s) + "'");
}

bool Instance::is_committed(ElementId x) const {
    return std::find(committed.begin(), committed.end(), x) != committed.end();
}

ElementSet Instance::remaining_ground() const {
    ElementSet out;
    for (int i = 0; i < ground_size(); ++i) {
        if (!is_committed(i)) out.push_back(i);
    }
    return out;
}

Objective Instance::natural_objective() const {
    switch (kind) {
        case ProblemKind::IndependentSet:
        case ProblemKind::Knapsack: return Objective::Max;
        default: return Objective::Min;
    }
}

void Instance::validate() const {
    const int n = ground_size();
    if (n == 0) throw InvalidInstanceError("empty ground set");
    if (n > 64) throw InvalidInstanceError("ground sets are limited to 64 elements");
    for (const Int& w : weights) {
        if (w < 0) throw InvalidInstanceError("weights must be nonnegative");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw InvalidInstanceError("labels must be absent or one per element");
    }
    switch (kind) {
        case ProblemKind::SetCover:
            if (universe < 0 || universe > 64) {
                throw InvalidInstanceError("set_cover universe out of range");
            }
            if (static_cast<int>(sets.size()) != n) {
                throw InvalidInstanceError("set_cover needs one set per ground element");
            }
            for (const auto& s : sets) {
                for (int p : s) {
                    if (p < 0 || p >= universe) throw InvalidInstanceError("covered point out of range");
                }
            }
            break;
        case ProblemKind::HittingSet:
            if (universe != n) {
                throw InvalidInstanceError("hitting_set universe must equal the ground size");
            }
            for (const auto& s : sets) {
                for (int p : s) {
                    if (p < 0 || p >= n) throw InvalidInstanceError("hit-set point out of range");
                }
            }
            break;
        case ProblemKind::IndependentSet:
            for (auto [u, v] : edges) {
                if (u < 0 || u >= n || v < 0 || v >= n) {
                    throw InvalidInstanceError("edge endpoint out of range");
                }
                if (u == v) throw InvalidInstanceError("self-loops are not allowed");
            }
            break;
        case ProblemKind::Knapsack:
            if (static_cast<int>(loads.size()) != n) {
                throw InvalidInstanceError("knapsack needs one load per item");
            }
            for (const Int& l : loads) {
                if (l < 0) throw InvalidInstanceError("loads must be nonnegative");
            }
            if (capacity < 0) throw InvalidInstanceError("negative capacity");
            break;
        case ProblemKind::Explicit:
            if (family.empty()) throw InvalidInstanceError("explicit family must be nonempty");
            for (const auto& s : family) {
                for (int p : s) {
                    if (p < 0 || p >= n) throw InvalidInstanceError("family member out of range");
                }
            }
            break;
    }
    std::set<ElementId> seen;
    for (ElementId x : committed) {
        if (x < 0 || x >= n) throw InvalidInstanceError("committed id out of range");
        if (!seen.insert(x).second) throw InvalidInstanceError("duplicate committed id");
    }
}

namespace {

// Validates that `solution` is a sorted, duplicate-free subset of the
// remaining ground and returns its mask.
Mask solution_mask(const Instance& inst, const ElementSet& solution) {
    Mask m = 0;
    for (ElementId e : solution) {
        if (e < 0 || e >= inst.ground_size()) {
            throw InvalidSolutionError("unknown element id " + std::to_string(e));
        }
        if (inst.is_committed(e)) {
            throw InvalidSolutionError("element " + std::to_string(e) + " is already committed");
        }
        Mask b = detail::bit_of(e);
        if (m & b) throw InvalidSolutionError("duplicate element id " + std::to_string(e));
        m |= b;
    }
    return m;
}

}  // namespace

Int plain_cost(const Instance& inst, const ElementSet& solution) {
    solution_mask(inst, solution);
    Int total{0};
    for (ElementId e : solution) total += inst.weights[e];
    return total;
}

ElementId biased_pivot(const Instance& inst, const ElementSet& solution, const Bias& bias) {
    bias.validate();
    solution_mask(inst, solution);
    if (solution.empty()) throw InvalidSolutionError("pivot of an empty solution is undefined");
    // The pivot is the element whose immediate execution extremizes the
    // perceived cost beta*c(S) + (1-beta)*w(x). Equal weights tie to the
    // smallest id; the ids are sorted, so strict comparison suffices.
    const bool want_min = (bias.objective == Objective::Min) == (bias.beta <= 1);
    ElementId best = solution.front();
    for (ElementId e : solution) {
        const bool better = want_min ? inst.weights[e] < inst.weights[best]
                                     : inst.weights[e] > inst.weights[best];
        if (better) best = e;
    }
    return best;
}

Rat biased_cost(const Instance& inst, const ElementSet& solution, const Bias& bias) {
    bias.validate();
    if (solution.empty()) return Rat{0};
    ElementId pivot = biased_pivot(inst, solution, bias);
    Int rest = plain_cost(inst, solution) - inst.weights[pivot];
    return Rat(inst.weights[pivot]) + bias.beta * Rat(rest);
}

Instance residual(const Instance& inst, ElementId x) {
    if (x < 0 || x >= inst.ground_size()) {
        throw InvalidSolutionError("unknown element id " + std::to_string(x));
    }
    if (inst.is_committed(x)) {
        throw InvalidSolutionError("element " + std::to_string(x) + " is already committed");
    }
    Instance out = inst;
    out.committed.push_back(x);
    return out;
}

bool is_feasible(const Instance& inst, const ElementSet& solution) {
    MaskOracle oracle(inst);
    return oracle.feasible(solution_mask(inst, solution));
}

bool is_minimal_feasible(const Instance& inst, const ElementSet& solution) {
    MaskOracle oracle(inst);
    Mask m = solution_mask(inst, solution);
    if (!oracle.feasible(m)) return false;
    for (ElementId e : solution) {
        if (oracle.feasible(m & ~detail::bit_of(e))) return false;
    }
    return true;
}

bool is_maximal_feasible(const Instance& inst, const ElementSet& solution) {
    MaskOracle oracle(inst);
    Mask m = solution_mask(inst, solution);
    if (!oracle.feasible(m)) return false;
    Mask addable = oracle.remaining_mask() & ~m;
    while (addable) {
        Mask b = addable & (~addable + 1);
        if (oracle.feasible(m | b)) return false;
        addable &= addable - 1;
    }
    return true;
}

ClosureReport verify_closure(const Instance& inst) {
    inst.validate();
    ClosureReport report;
    const ElementSet remaining = inst.remaining_ground();
    const int r = static_cast<int>(remaining.size());
    if (r > 20) {
        throw SizeLimitError("verify_closure is exhaustive and limited to 20 remaining elements");
    }
    MaskOracle oracle(inst);

    const Objective natural = inst.natural_objective();
    report.min_kind = natural == Objective::Min;
    if (!report.min_kind) {
        report.notice = "maximization kind: upward-closure check skipped";
        report.residuals_solvable = oracle.feasible(0);
        return report;
    }

    // Exhaustive upward-closure check over subsets of the remaining ground.
    const std::uint64_t count = std::uint64_t{1} << r;
    std::vector<bool> feas(count);
    std::vector<Mask> ground_mask(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        Mask gm = 0;
        for (int i = 0; i < r; ++i) {
            if (m & (std::uint64_t{1} << i)) gm |= detail::bit_of(remaining[i]);
        }
        ground_mask[m] = gm;
        feas[m] = oracle.feasible(gm);
    }
    report.upward_checked = true;
    report.upward_holds = true;
    constexpr std::size_t kMaxCounterexamples = 8;
    for (std::uint64_t m = 0; m < count && report.counterexamples.size() < kMaxCounterexamples; ++m) {
        if (!feas[m]) continue;
        for (int i = 0; i < r; ++i) {
            const std::uint64_t sup = m | (std::uint64_t{1} << i);
            if (sup != m && !feas[sup]) {
                report.upward_holds = false;
                report.counterexamples.emplace_back(detail::set_of(ground_mask[m]),
                                                    detail::set_of(ground_mask[sup]));
                break;
            }
        }
    }

    // With upward closure, residual chains stay solvable iff the full
    // remaining ground is feasible. Raw families are solvable as long as the
    // family itself is nonempty: every S \ C stays listed.
    if (oracle.raw_family()) {
        report.residuals_solvable = !inst.family.empty();
    } else {
        report.residuals_solvable = feas[count - 1];
    }
    return report;
}

std::string instance_digest(const Instance& inst) {
    std::ostringstream text;
    text << kind_string(inst.kind) << "|w=";
    for (const Int& w : inst.weights) text << w.str() << ",";
    switch (inst.kind) {
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet:
            text << "|u=" << inst.universe << "|s=";
            for (const auto& s : inst.sets) {
                for (int p : s) text << p << ".";
                text << ";";
            }
            break;
        case ProblemKind::IndependentSet:
            text << "|e=";
            for (auto [u, v] : inst.edges) text << u << "." << v << ";";
            break;
        case ProblemKind::Knapsack:
            text << "|l=";
            for (const Int& l : inst.loads) text << l.str() << ",";
            text << "|c=" << inst.capacity.str();
            break;
        case ProblemKind::Explicit:
            text << "|f=";
            for (const auto& s : inst.family) {
                for (int p : s) text << p << ".";
                text << ";";
            }
            text << "|" << (inst.closure == FamilyClosure::Up ? "up" : "raw");
            break;
    }
    text << "|k=";
    for (ElementId x : inst.committed) text << x << ",";

    // FNV-1a, 64 bit
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// MaskOracle

namespace detail {

MaskOracle::MaskOracle(const Instance& inst) : inst_(&inst), n_(inst.ground_size()) {
    committed_ = mask_of(inst.committed);
    remaining_ = (n_ == 64 ? ~Mask{0} : (bit_of(n_) - 1)) & ~committed_;

    switch (inst.kind) {
        case ProblemKind::SetCover: {
            monotone_up_ = true;
            universe_full_ = inst.universe == 64 ? ~Mask{0}
                                                 : ((Mask{1} << inst.universe) - 1);
            covers_.resize(n_, 0);
            for (int i = 0; i < n_; ++i) {
                for (int p : inst.sets[i]) covers_[i] |= Mask{1} << p;
            }
            for (ElementId x : inst.committed) covered_by_committed_ |= covers_[x];
            break;
        }
        case ProblemKind::HittingSet: {
            monotone_up_ = true;
            for (const auto& s : inst.sets) {
                Mask sm = mask_of(s);
                if ((sm & committed_) == 0) unhit_sets_.push_back(sm);
            }
            break;
        }
        case ProblemKind::IndependentSet: {
            monotone_down_ = true;
            adjacency_.resize(n_, 0);
            for (auto [u, v] : inst.edges) {
                adjacency_[u] |= bit_of(v);
                adjacency_[v] |= bit_of(u);
            }
            for (ElementId x : inst.committed) {
                if (adjacency_[x] & committed_) committed_independent_ = false;
            }
            break;
        }
        case ProblemKind::Knapsack: {
            monotone_down_ = true;
            for (ElementId x : inst.committed) committed_load_ += inst.loads[x];
            break;
        }
        case ProblemKind::Explicit: {
            for (const auto& s : inst.family) family_masks_.push_back(mask_of(s));
            if (inst.closure == FamilyClosure::Up) {
                monotone_up_ = true;
            } else {
                raw_ = true;
                for (Mask fm : family_masks_) {
                    Mask c = fm & ~committed_;
                    if (std::find(raw_candidates_.begin(), raw_candidates_.end(), c) ==
                        raw_candidates_.end()) {
                        raw_candidates_.push_back(c);
                    }
                }
            }
            break;
        }
    }
}

bool MaskOracle::feasible(Mask smask) const {
    switch (inst_->kind) {
        case ProblemKind::SetCover: {
            Mask covered = covered_by_committed_;
            Mask m = smask;
            while (m) {
                covered |= covers_[std::countr_zero(m)];
                m &= m - 1;
            }
            return (covered & universe_full_) == universe_full_;
        }
        case ProblemKind::HittingSet: {
            for (Mask sm : unhit_sets_) {
                if ((sm & smask) == 0) return false;
            }
            return true;
        }
        case ProblemKind::IndependentSet: {
            if (!committed_independent_) return false;
            Mask all = smask | committed_;
            Mask m = smask;
            while (m) {
                if (adjacency_[std::countr_zero(m)] & all) return false;
                m &= m - 1;
            }
            return true;
        }
        case ProblemKind::Knapsack: {
            Int load = committed_load_;
            Mask m = smask;
            while (m) {
                load += inst_->loads[std::countr_zero(m)];
                m &= m - 1;
            }
            return load <= inst_->capacity;
        }
        case ProblemKind::Explicit: {
            if (raw_) {
                for (Mask c : raw_candidates_) {
                    if (c == smask) return true;
                }
                return false;
            }
            Mask present = smask | committed_;
            for (Mask fm : family_masks_) {
                if ((fm & ~present) == 0) return true;
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

}  // namespace biaslab
