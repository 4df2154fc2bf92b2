#include "biaslab/taskgraph.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mask_oracle.hpp"

namespace biaslab {

using detail::Mask;
using detail::MaskOracle;

namespace {

std::vector<int> topological_order(const WeightedDag& dag) {
    std::vector<int> indegree(dag.vertex_count, 0);
    std::vector<std::vector<int>> out(dag.vertex_count);
    for (const auto& a : dag.arcs) {
        out[a.from].push_back(a.to);
        ++indegree[a.to];
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 0; v < dag.vertex_count; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : out[v]) {
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != dag.vertex_count) {
        throw InvalidInstanceError("graph contains a cycle");
    }
    return order;
}

/// Per-vertex extremal cost to the sink; nullopt where the sink is
/// unreachable.
std::vector<std::optional<Int>> extremal_table(const WeightedDag& dag, Objective objective) {
    const std::vector<int> order = topological_order(dag);
    std::vector<std::vector<std::pair<int, Int>>> out(dag.vertex_count);
    for (const auto& a : dag.arcs) out[a.from].emplace_back(a.to, a.weight);
    std::vector<std::optional<Int>> cost(dag.vertex_count);
    cost[dag.sink] = Int{0};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (v == dag.sink) continue;
        std::optional<Int> best;
        for (const auto& [to, w] : out[v]) {
            if (!cost[to]) continue;
            Int c = w + *cost[to];
            if (!best || (objective == Objective::Min ? c < *best : c > *best)) best = c;
        }
        cost[v] = best;
    }
    return cost;
}

}  // namespace

void WeightedDag::validate() const {
    if (vertex_count <= 0) throw InvalidInstanceError("graph needs at least one vertex");
    if (source == sink) throw InvalidInstanceError("source and sink must differ");
    auto in_range = [&](int v) { return v >= 0 && v < vertex_count; };
    if (!in_range(source) || !in_range(sink)) {
        throw InvalidInstanceError("source or sink out of range");
    }
    for (const auto& a : arcs) {
        if (!in_range(a.from) || !in_range(a.to)) {
            throw InvalidInstanceError("arc endpoint out of range");
        }
        if (a.weight < 0) throw InvalidInstanceError("arc weights must be nonnegative");
    }
    topological_order(*this);
}

Int extremal_cost(const WeightedDag& dag, int vertex, Objective objective) {
    dag.validate();
    if (vertex < 0 || vertex >= dag.vertex_count) {
        throw InvalidInstanceError("vertex out of range");
    }
    auto table = extremal_table(dag, objective);
    if (!table[vertex]) throw InfeasibleError("vertex cannot reach the sink");
    return *table[vertex];
}

WalkResult biased_walk(const WeightedDag& dag, const Bias& bias) {
    dag.validate();
    bias.validate();
    auto table = extremal_table(dag, bias.objective);
    if (!table[dag.source]) throw InfeasibleError("source cannot reach the sink");

    // Structural check: a walk may visit any vertex reachable from the
    // source, so all of them must reach the sink.
    {
        std::vector<std::vector<int>> out(dag.vertex_count);
        for (const auto& a : dag.arcs) out[a.from].push_back(a.to);
        std::vector<bool> seen(dag.vertex_count, false);
        std::vector<int> stack{dag.source};
        seen[dag.source] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!table[v]) {
                throw InfeasibleError("vertex " + std::to_string(v) +
                                      " is reachable but cannot reach the sink");
            }
            for (int w : out[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<std::vector<std::pair<int, Int>>> out(dag.vertex_count);
    for (const auto& a : dag.arcs) out[a.from].emplace_back(a.to, a.weight);
    const Int beta_num = numerator(bias.beta);
    const Int beta_den = denominator(bias.beta);
    const bool minimize = bias.objective == Objective::Min;

    WalkResult result;
    result.path.push_back(dag.source);
    int v = dag.source;
    while (v != dag.sink) {
        // Perceived value of an out-arc over the common denominator den(beta).
        bool have = false;
        Int best_value{0};
        int best_to = -1;
        Int best_w{0};
        for (const auto& [to, w] : out[v]) {
            Int value = beta_den * w + beta_num * *table[to];
            bool better;
            if (!have) {
                better = true;
            } else if (value != best_value) {
                better = minimize ? value < best_value : value > best_value;
            } else if (to != best_to) {
                better = to < best_to;
            } else {
                better = w < best_w;
            }
            if (better) {
                best_value = value;
                best_to = to;
                best_w = w;
                have = true;
            }
        }
        result.length += best_w;
        result.path.push_back(best_to);
        v = best_to;
    }
    result.optimum = *table[dag.source];
    const Int& num = minimize ? result.length : result.optimum;
    const Int& den = minimize ? result.optimum : result.length;
    if (den == 0) {
        if (num == 0) {
            result.ratio = 1;
        } else {
            result.ratio_infinite = true;
        }
    } else {
        result.ratio = Rat(num, den);
    }
    return result;
}

WeightedDag akerlof_graph(int n, const Int& x, const Int& c) {
    if (n < 1) throw InvalidInstanceError("akerlof graph needs n >= 1");
    if (x >= c) throw InvalidInstanceError("akerlof graph needs x < c");
    // ids: source 0, sink 1, v_i = 1 + i.
    WeightedDag dag;
    dag.vertex_count = n + 2;
    dag.source = 0;
    dag.sink = 1;
    dag.arcs.push_back({0, 1, c});
    dag.arcs.push_back({0, 2, x});
    for (int i = 1; i <= n; ++i) {
        if (i < n) dag.arcs.push_back({1 + i, 2 + i, x});
        dag.arcs.push_back({1 + i, 1, c});
    }
    return dag;
}

WeightedDag instance_to_taskgraph(const Instance& inst, Objective objective) {
    inst.validate();
    if (!inst.committed.empty()) {
        throw InvalidInstanceError("taskgraph embedding expects a fresh instance");
    }
    const int n = inst.ground_size();
    if (n > 16) throw SizeLimitError("taskgraph embedding limited to 16 ground elements");
    MaskOracle oracle(inst);
    if (oracle.raw_family()) {
        // Without upward closure the walk can strand in states no completion
        // finishes from, so the embedding is not defined.
        throw InvalidInstanceError("raw explicit families are not embeddable");
    }
    const Mask full = oracle.remaining_mask();
    if (objective == Objective::Min && !oracle.feasible(full)) {
        throw ModelViolationError("ground set is not feasible; the task cannot complete");
    }

    // Stop rule of the agent at a committed state.
    auto stopped = [&](Mask state) {
        if (objective == Objective::Min) return oracle.feasible(state);
        if (!oracle.feasible(state)) return false;
        Mask addable = full & ~state;
        while (addable) {
            Mask b = addable & (~addable + 1);
            if (oracle.feasible(state | b)) return false;
            addable &= addable - 1;
        }
        return true;
    };
    // An element is committable when it is the pivot of some feasible
    // candidate of the residual: always, for upward-closed kinds; exactly
    // the feasibility-preserving ones, for downward-closed kinds.
    auto can_commit = [&](Mask state, Mask bit) {
        if (oracle.monotone_up()) return true;
        return oracle.feasible(state | bit);
    };

    if (stopped(0)) {
        throw InvalidInstanceError("the empty state already satisfies the stop rule");
    }

    // Collect reachable live states breadth-first.
    std::map<Mask, int> state_id;
    std::vector<Mask> states{0};
    state_id[0] = 0;
    std::size_t frontier = 0;
    while (frontier < states.size()) {
        const Mask state = states[frontier++];
        Mask options = full & ~state;
        while (options) {
            Mask b = options & (~options + 1);
            options &= options - 1;
            if (!can_commit(state, b)) continue;
            const Mask next = state | b;
            if (stopped(next)) continue;  // absorbed by the sink
            if (!state_id.count(next)) {
                state_id[next] = static_cast<int>(states.size());
                states.push_back(next);
            }
        }
    }

    // Completion optimum and the size-then-lex smallest optimal closure per
    // live state, by dynamic programming in descending state size.
    // Committing past the stop rule never helps, so stopping at the first
    // absorbing target is exact.
    auto closure_less = [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return detail::lex_less(a, b);
    };
    std::vector<Mask> by_size(states);
    std::sort(by_size.begin(), by_size.end(), [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::map<Mask, Int> completion;
    std::map<Mask, Mask> closure;  // state plus its preferred optimal completion
    for (Mask state : by_size) {
        std::optional<Int> best;
        Mask best_closure = 0;
        Mask options = full & ~state;
        while (options) {
            Mask b = options & (~options + 1);
            options &= options - 1;
            if (!can_commit(state, b)) continue;
            const Mask next = state | b;
            const bool finishes = stopped(next);
            Int value = inst.weights[std::countr_zero(b)];
            if (!finishes) value += completion.at(next);
            const Mask next_closure = finishes ? next : closure.at(next);
            bool better;
            if (!best) {
                better = true;
            } else if (value != *best) {
                better = objective == Objective::Min ? value < *best : value > *best;
            } else {
                better = closure_less(next_closure, best_closure);
            }
            if (better) {
                best = value;
                best_closure = next_closure;
            }
        }
        if (!best) throw ModelViolationError("a reachable state cannot complete the task");
        completion[state] = *best;
        closure[state] = best_closure;
    }

    // Number the states so that the walk's smallest-target-id tie-break
    // plays out exactly like the agent's solution tie-breaks. Targets of
    // perceived-value-tied arcs from one state compare first by
    // g(t) = c(t) + opt(residual at t) (the agent's plain-cost tie-break;
    // beta-independent), then by the preferred optimal closure (the agent's
    // size-then-lex tie-break; the shared committed prefix cancels out of
    // that comparison).
    std::vector<Mask> ordered(states);
    std::map<Mask, Int> g;
    for (Mask state : ordered) {
        Int plain{0};
        Mask m = state;
        while (m) {
            plain += inst.weights[std::countr_zero(m)];
            m &= m - 1;
        }
        g[state] = plain + completion.at(state);
    }
    std::sort(ordered.begin(), ordered.end(), [&](Mask a, Mask b) {
        if (g.at(a) != g.at(b)) return g.at(a) < g.at(b);
        if (closure.at(a) != closure.at(b)) return closure_less(closure.at(a), closure.at(b));
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    for (std::size_t i = 0; i < ordered.size(); ++i) state_id[ordered[i]] = static_cast<int>(i);

    WeightedDag dag;
    dag.vertex_count = static_cast<int>(ordered.size()) + 1;
    dag.source = state_id.at(0);
    dag.sink = dag.vertex_count - 1;
    for (Mask state : ordered) {
        Mask options = full & ~state;
        while (options) {
            Mask b = options & (~options + 1);
            options &= options - 1;
            if (!can_commit(state, b)) continue;
            const int e = std::countr_zero(b);
            const Mask next = state | b;
            const int to = stopped(next) ? dag.sink : state_id.at(next);
            dag.arcs.push_back({state_id.at(state), to, inst.weights[e]});
        }
    }
    dag.validate();
    return dag;
}

}  // namespace biaslab
