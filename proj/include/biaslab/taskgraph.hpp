#pragma once

#include "biaslab/instance.hpp"

namespace biaslab {

/// Weighted DAG navigated from a source to a sink by a present-biased walk.
struct WeightedDag {
    struct Arc {
        int from = 0;
        int to = 0;
        Int weight{0};
    };
    int vertex_count = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int sink = 0;

    /// Topological order check plus basic shape validation; throws
    /// InvalidInstanceError on cycles, bad ids, or source == sink.
    void validate() const;
};

/// Exact shortest (Min) or longest (Max) v-to-sink path length, by dynamic
/// programming over the reverse topological order. Throws InfeasibleError
/// when v cannot reach the sink.
Int extremal_cost(const WeightedDag& dag, int vertex, Objective objective);

struct WalkResult {
    std::vector<int> path;  // source ... sink
    Int length{0};
    Int optimum{0};  // extremal_cost(source)
    Rat ratio{0};
    bool ratio_infinite = false;
};

/// Present-biased walk: at each vertex take the out-arc extremizing
/// w(v,x) + beta * extremal_cost(x), ties to the smallest target vertex id.
/// Errors out up front if some vertex reachable from the source cannot reach
/// the sink (the walk could strand there).
WalkResult biased_walk(const WeightedDag& dag, const Bias& bias);

/// The classic procrastination structure: source s, chain v_1..v_n, sink t;
/// s->t and every v_i->t cost c, s->v_1 and the chain arcs cost x. The sink
/// gets vertex id 1 so that an indifferent agent (x + beta*c = c) takes the
/// direct arc.
WeightedDag akerlof_graph(int n, const Int& x, const Int& c);

/// Embeds an instance as its task graph: vertices are the committed-sets the
/// agent can reach, the sink absorbs every state where the stop rule fires,
/// and each arc performs one element at its weight. A biased walk on the
/// embedding reproduces the unrestricted agent's final cost. Requires
/// ground size <= 16.
WeightedDag instance_to_taskgraph(const Instance& inst, Objective objective);

}  // namespace biaslab
