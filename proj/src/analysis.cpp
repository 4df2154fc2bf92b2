#include "biaslab/analysis.hpp"

#include <algorithm>
#include <map>

#include "biaslab/generators.hpp"

namespace biaslab {

bool BoundReport::all_applicable_hold() const {
    for (const auto& e : entries) {
        if (e.applicable && !e.holds) return false;
    }
    return true;
}

int BoundReport::applicable_count() const {
    int c = 0;
    for (const auto& e : entries) c += e.applicable ? 1 : 0;
    return c;
}

int BoundReport::passed_count() const {
    int c = 0;
    for (const auto& e : entries) c += (e.applicable && e.holds) ? 1 : 0;
    return c;
}

const BoundEntry* BoundReport::find(std::string_view name) const {
    for (const auto& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

namespace {

std::uint64_t exponent_of(const Int& cost) {
    if (cost < 0 || cost > 1000000) {
        throw SizeLimitError("bound exponent out of desk-scale range");
    }
    return cost.convert_to<std::uint64_t>();
}

int max_set_size(const Instance& inst) {
    std::size_t d = 0;
    for (const auto& s : inst.sets) d = std::max(d, s.size());
    return static_cast<int>(d);
}

std::optional<int> uniform_set_size(const Instance& inst) {
    if (inst.sets.empty()) return std::nullopt;
    const std::size_t d = inst.sets.front().size();
    for (const auto& s : inst.sets) {
        if (s.size() != d) return std::nullopt;
    }
    return static_cast<int>(d);
}

}  // namespace

BoundReport bound_report(const AgentTrace& trace, const Instance& inst) {
    if (instance_digest(inst) != trace.instance_digest) {
        throw InvalidInstanceError("trace does not belong to this instance");
    }
    const Bias& bias = trace.config.bias;
    const bool min_objective = bias.objective == Objective::Min;
    const bool under = bias.beta < 1;
    const bool over = bias.beta > 1;
    const bool exact = bias.alpha == 1;
    const bool free_agent = trace.config.consistency == Consistency::Free;
    const Restriction restriction = trace.config.effective_restriction();
    const Rat k{trace.step_count()};
    const Rat opt{trace.opt};

    BoundReport report;
    auto add = [&](std::string name, bool applicable, const Rat& lhs, const Rat& rhs,
                   bool lhs_infinite = false) {
        BoundEntry e;
        e.name = std::move(name);
        e.applicable = applicable;
        e.lhs = lhs;
        e.rhs = rhs;
        e.lhs_infinite = lhs_infinite;
        e.holds = applicable && !lhs_infinite && lhs <= rhs;
        report.entries.push_back(std::move(e));
    };
    auto add_ratio_bound = [&](std::string name, bool applicable, const Rat& rhs) {
        add(std::move(name), applicable, trace.ratio, applicable ? rhs : Rat{0},
            trace.ratio_infinite);
    };

    // The linear and consistency bounds describe the two agent disciplines;
    // each applies to the runs of its own discipline.
    add_ratio_bound("LINEAR_K", min_objective && under && free_agent, bias.alpha * k);
    add_ratio_bound("CONSISTENT", min_objective && under && !free_agent,
                    bias.alpha / bias.beta);
    add_ratio_bound("MIN_OVER", min_objective && over && exact && free_agent, bias.beta);
    add_ratio_bound("MAX_UNDER", !min_objective && under && exact, 1 / bias.beta);

    const bool max_over = !min_objective && over && exact;
    if (max_over) {
        const std::uint64_t c = exponent_of(trace.final_cost);
        add("MAX_OVER_EXP", true, opt, Rat(trace.final_cost) * rat_pow(bias.beta, c));
        add("MAX_OVER_LOG", true, opt, rat_pow(2 * bias.beta, c));
    } else {
        add("MAX_OVER_EXP", false, Rat{0}, Rat{0});
        add("MAX_OVER_LOG", false, Rat{0}, Rat{0});
    }

    // The task-specific bounds assume the agent avoids superfluous choices.
    const bool disciplined = free_agent && restriction == Restriction::MinimalOnly;
    const bool dcover =
        inst.kind == ProblemKind::SetCover && min_objective && under && disciplined;
    add_ratio_bound("DCOVER", dcover,
                    dcover ? bias.alpha * max_set_size(inst) * opt : Rat{0});

    const std::optional<int> hit_d = uniform_set_size(inst);
    const bool dhit = inst.kind == ProblemKind::HittingSet && hit_d.has_value() &&
                      min_objective && under && disciplined;
    if (dhit) {
        const Rat inner = (bias.alpha / bias.beta) * opt;
        const Rat rhs = bias.alpha * Rat(int_factorial(*hit_d)) *
                        rat_pow(inner, static_cast<std::uint64_t>(*hit_d));
        add_ratio_bound("DHIT", true, rhs);
    } else {
        add_ratio_bound("DHIT", false, Rat{0});
    }
    return report;
}

MinorExtraction extract_minor(const AgentTrace& trace, const Instance& inst) {
    if (instance_digest(inst) != trace.instance_digest) {
        throw InvalidInstanceError("trace does not belong to this instance");
    }
    const Bias& bias = trace.config.bias;
    if (bias.objective != Objective::Min || bias.beta >= 1) {
        throw InvalidInstanceError("minor extraction needs a Min trace with beta < 1");
    }
    if (bias.alpha != 1) {
        throw InvalidInstanceError("minor extraction is stated for the exact agent only");
    }
    if (trace.config.consistency != Consistency::Free) {
        throw InvalidInstanceError("minor extraction needs an unrestricted-consistency trace");
    }
    const int n = trace.step_count();
    if (n < 1) throw InvalidInstanceError("trace has no steps");

    MinorExtraction out;
    std::vector<Int> wx, wy;
    Instance residual_inst = inst;
    for (int i = 0; i < n; ++i) {
        const ElementId pivot = trace.steps[i].evaluation.pivot;
        wx.push_back(inst.weights[pivot]);
        wy.push_back(trace.steps[i].residual_opt);
        out.x_bundles.push_back({pivot});
        // Witness of the residual optimum; its value must replay the trace.
        OptResult opt = exact_opt(residual_inst, Objective::Min);
        if (opt.value != trace.steps[i].residual_opt) {
            throw Error("recorded residual optimum does not replay");
        }
        out.y_bundles.push_back(opt.witness);
        residual_inst = residual(residual_inst, pivot);
    }
    out.minor = generators::jn(n, wx, wy);

    out.bundles_distinct = true;
    for (int i = 0; i + 1 < n && out.bundles_distinct; ++i) {
        for (int j = 0; j < n; ++j) {
            if (out.x_bundles[i] == out.y_bundles[j]) {
                out.bundles_distinct = false;
                break;
            }
        }
    }

    AgentConfig replay_cfg;
    replay_cfg.bias = Bias{bias.beta, Objective::Min, Rat{1}};
    replay_cfg.evaluator =
        EvaluatorSpec{EvalMode::Exact, Rat{1}, Restriction::None};
    replay_cfg.consistency = Consistency::Free;
    replay_cfg.seed = 0;
    out.replay = run_agent(out.minor, replay_cfg);
    return out;
}

namespace {

std::optional<Sunflower> sunflower_search(const std::vector<ElementSet>& family,
                                          const std::vector<int>& original_index, int k) {
    if (family.empty()) return std::nullopt;
    if (k == 1) {
        return Sunflower{{original_index.front()}, family.front()};
    }

    // Greedy pairwise-disjoint subfamily.
    std::vector<int> disjoint;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool ok = true;
        for (int j : disjoint) {
            const ElementSet& a = family[i];
            const ElementSet& b = family[j];
            if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end()) {
                ok = false;
                break;
            }
        }
        if (ok) disjoint.push_back(static_cast<int>(i));
    }
    if (static_cast<int>(disjoint.size()) >= k) {
        Sunflower sf;
        for (int i = 0; i < k; ++i) sf.petals.push_back(original_index[disjoint[i]]);
        return sf;  // empty core
    }
    if (family.front().empty()) return std::nullopt;  // d = 0, fewer than k sets

    // Some element is frequent; recurse on its link with the element removed.
    std::map<ElementId, int> occurrence;
    for (const auto& s : family) {
        for (ElementId e : s) ++occurrence[e];
    }
    std::vector<std::pair<int, ElementId>> order;
    for (auto [e, cnt] : occurrence) order.emplace_back(-cnt, e);
    std::sort(order.begin(), order.end());
    for (auto [neg_cnt, e] : order) {
        std::vector<ElementSet> link;
        std::vector<int> link_index;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (std::find(family[i].begin(), family[i].end(), e) == family[i].end()) continue;
            ElementSet reduced;
            for (ElementId x : family[i]) {
                if (x != e) reduced.push_back(x);
            }
            link.push_back(std::move(reduced));
            link_index.push_back(original_index[i]);
        }
        auto sub = sunflower_search(link, link_index, k);
        if (sub) {
            sub->core.insert(std::lower_bound(sub->core.begin(), sub->core.end(), e), e);
            return sub;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<ElementSet>& family, int k) {
    if (k < 1) throw InvalidInstanceError("need k >= 1 petals");
    if (family.empty()) return std::nullopt;
    const std::size_t d = family.front().size();
    for (const auto& s : family) {
        if (s.size() != d) throw InvalidInstanceError("sunflower search needs a d-uniform family");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw InvalidInstanceError("family sets must be sorted and duplicate-free");
        }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i] == family[j]) {
                throw InvalidInstanceError("family sets must be pairwise distinct");
            }
        }
    }
    std::vector<int> index(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) index[i] = static_cast<int>(i);
    return sunflower_search(family, index, k);
}

bool validate_sunflower(const std::vector<ElementSet>& family, const Sunflower& sf) {
    for (int p : sf.petals) {
        if (p < 0 || p >= static_cast<int>(family.size())) return false;
    }
    for (std::size_t i = 0; i < sf.petals.size(); ++i) {
        for (std::size_t j = i + 1; j < sf.petals.size(); ++j) {
            const ElementSet& a = family[sf.petals[i]];
            const ElementSet& b = family[sf.petals[j]];
            if (a == b) return false;
            ElementSet inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (inter != sf.core) return false;
        }
    }
    return true;
}

HitStepReport dhit_step_bound(const AgentTrace& trace, const Instance& inst) {
    if (instance_digest(inst) != trace.instance_digest) {
        throw InvalidInstanceError("trace does not belong to this instance");
    }
    if (inst.kind != ProblemKind::HittingSet) {
        throw InvalidInstanceError("step bound is about hitting-set traces");
    }
    const std::optional<int> d = uniform_set_size(inst);
    if (!d) throw InvalidInstanceError("step bound needs a d-uniform family");

    HitStepReport report;
    report.steps = trace.step_count();
    const Rat inner = (trace.config.bias.alpha / trace.config.bias.beta) * Rat(trace.opt);
    report.step_bound =
        Rat(int_factorial(*d)) * rat_pow(inner, static_cast<std::uint64_t>(*d));
    report.step_bound_holds = Rat(report.steps) <= report.step_bound;

    if (trace.config.effective_restriction() == Restriction::MinimalOnly) {
        report.private_sets_checked = true;
        report.private_sets_ok = true;
        ElementSet committed_before;
        for (const auto& step : trace.steps) {
            const ElementSet& solution = step.evaluation.solution;
            const ElementId pivot = step.evaluation.pivot;
            bool found = false;
            for (const auto& sigma : inst.sets) {
                // Active in this residual: untouched by earlier commitments.
                bool active = true;
                for (ElementId v : committed_before) {
                    if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) {
                        active = false;
                        break;
                    }
                }
                if (!active) continue;
                if (std::find(sigma.begin(), sigma.end(), pivot) == sigma.end()) continue;
                bool private_set = true;
                for (ElementId v : solution) {
                    if (v != pivot && std::find(sigma.begin(), sigma.end(), v) != sigma.end()) {
                        private_set = false;
                        break;
                    }
                }
                if (private_set) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.private_sets_ok = false;
                break;
            }
            committed_before.insert(
                std::lower_bound(committed_before.begin(), committed_before.end(), pivot),
                pivot);
        }
    }
    return report;
}

}  // namespace biaslab
