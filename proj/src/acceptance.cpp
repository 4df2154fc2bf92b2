#include "biaslab/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace biaslab::acceptance {

Suite suite_from_string(std::string_view s) {
    if (s == "quick") return Suite::Quick;
    if (s == "full") return Suite::Full;
    throw ParseError("unknown suite: '" + std::string(s) + "'");
}

WeightedDag random_dag(std::uint64_t seed, int max_vertices, int wmax) {
    std::mt19937_64 rng(seed);
    const int n = 3 + static_cast<int>(rng() % std::max(1, max_vertices - 2));
    WeightedDag dag;
    dag.vertex_count = n;
    dag.source = 0;
    dag.sink = n - 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() % 3 == 0) {
                dag.arcs.push_back({i, j, Int(1 + static_cast<long long>(rng() % wmax))});
            }
        }
    }
    // A spine keeps every vertex on a source-to-sink route.
    for (int i = 0; i + 1 < n; ++i) {
        dag.arcs.push_back({i, i + 1, Int(1 + static_cast<long long>(rng() % wmax))});
    }
    return dag;
}

Instance random_independent_set(std::uint64_t seed, int n, int wmax) {
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.kind = ProblemKind::IndependentSet;
    for (int v = 0; v < n; ++v) {
        inst.weights.emplace_back(1 + static_cast<long long>(rng() % wmax));
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() % 3 == 0) inst.edges.emplace_back(u, v);
        }
    }
    inst.validate();
    return inst;
}

Instance random_knapsack(std::uint64_t seed, int n, int wmax) {
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.kind = ProblemKind::Knapsack;
    Int total{0};
    for (int i = 0; i < n; ++i) {
        inst.weights.emplace_back(1 + static_cast<long long>(rng() % wmax));
        inst.loads.emplace_back(1 + static_cast<long long>(rng() % 6));
        total += inst.loads.back();
    }
    inst.capacity = Int{total / 2};
    if (inst.capacity < 1) inst.capacity = 1;
    inst.validate();
    return inst;
}

namespace {

struct Checker {
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& detail) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = detail();
    }
    void expect(bool ok, const std::string& detail) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = detail;
    }
};

AgentConfig make_config(Objective obj, const Rat& beta, const Rat& alpha,
                        std::optional<Restriction> restriction, Consistency consistency,
                        std::uint64_t seed) {
    AgentConfig cfg;
    cfg.bias = Bias{beta, obj, alpha};
    cfg.evaluator =
        EvaluatorSpec{alpha == 1 ? EvalMode::Exact : EvalMode::AdversarialAlpha, alpha,
                      restriction};
    cfg.consistency = consistency;
    cfg.seed = seed;
    return cfg;
}

std::string cell(const Instance& inst, const Rat& beta, const Rat& alpha) {
    return "instance " + instance_digest(inst) + " beta=" + rat_string(beta) +
           " alpha=" + rat_string(alpha);
}

std::vector<Rat> betas_for_c(int c, Suite suite) {
    // All satisfy 1 + beta*c < c.
    std::vector<Rat> full;
    switch (c) {
        case 2: full = {Rat(1, 10), Rat(1, 4), Rat(2, 5)}; break;
        case 3: full = {Rat(1, 10), Rat(1, 3), Rat(3, 5)}; break;
        default: full = {Rat(1, 10), Rat(2, 5), Rat(3, 4)}; break;
    }
    if (suite == Suite::Quick) return {full[1]};
    return full;
}

// Independent subset-scan optimum used where a criterion asks for an oracle
// cross-check of the ratio denominator.
Int brute_opt(const Instance& inst, Objective objective) {
    const int n = inst.ground_size();
    bool have = false;
    Int best{0};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet s;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) s.push_back(i);
        }
        if (!is_feasible(inst, s)) continue;
        Int plain{0};
        for (int e : s) plain += inst.weights[e];
        if (!have || (objective == Objective::Min ? plain < best : plain > best)) {
            best = plain;
            have = true;
        }
    }
    if (!have) throw InfeasibleError("brute_opt: no feasible solution");
    return best;
}

// Exhaustive source-to-sink path lengths.
void brute_paths(const WeightedDag& dag, int from, const Int& acc, std::vector<Int>& out) {
    if (from == dag.sink) {
        out.push_back(acc);
        return;
    }
    for (const auto& a : dag.arcs) {
        if (a.from == from) brute_paths(dag, a.to, acc + a.weight, out);
    }
}

Int brute_extremal(const WeightedDag& dag, Objective objective) {
    std::vector<Int> lengths;
    brute_paths(dag, dag.source, Int{0}, lengths);
    Int best = lengths.front();
    for (const Int& l : lengths) {
        if (objective == Objective::Min ? l < best : l > best) best = l;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Criteria

void c1_procrastination(Suite suite, std::uint64_t, Checker& ck) {
    const int n_max = suite == Suite::Full ? 10 : 6;
    for (int n = 2; n <= n_max; ++n) {
        for (int c : {2, 3, 5}) {
            for (const Rat& beta : betas_for_c(c, suite)) {
                Instance inst = generators::isc(n, c);
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, 1, Restriction::MinimalOnly,
                                      Consistency::Free, 0));
                ElementSet all_x(n);
                for (int i = 0; i < n; ++i) all_x[i] = i;
                ck.expect(trace.final_solution == all_x,
                          cell(inst, beta, 1) + ": agent left the singleton chain");
                const Int opt_expect = std::min<Int>(Int(c), Int(n));
                ck.expect(trace.opt == opt_expect, cell(inst, beta, 1) + ": wrong optimum");
                ck.expect(!trace.ratio_infinite && trace.ratio == Rat(Int(n), opt_expect),
                          cell(inst, beta, 1) + ": wrong ratio");
                if (c < n) {
                    ck.expect(trace.ratio == Rat(n, c),
                              cell(inst, beta, 1) + ": ratio is not n/c");
                }
            }
        }
    }
}

void c2_superfluous(Suite suite, std::uint64_t, Checker& ck) {
    const int n_max = suite == Suite::Full ? 10 : 6;
    for (int n = 2; n <= n_max; ++n) {
        for (int c : {2, 3, 5}) {
            Instance inst = generators::superfluous_cover(n, c);
            for (const Rat& beta : betas_for_c(c, suite)) {
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, 1, Restriction::None,
                                      Consistency::Free, 0));
                ElementSet all_x(n);
                for (int i = 0; i < n; ++i) all_x[i] = i;
                ck.expect(trace.final_solution == all_x,
                          cell(inst, beta, 1) + ": unrestricted agent left the singletons");
                if (c <= n) {
                    ck.expect(trace.ratio == Rat(n, c),
                              cell(inst, beta, 1) + ": ratio is not n/c");
                }
            }
            // Minimal-only agent computes {y} as soon as c < 1 + beta(n-1).
            for (const Rat& beta : betas_for_c(c, suite)) {
                if (!(Rat(c) < 1 + beta * (n - 1))) continue;
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, 1, Restriction::MinimalOnly,
                                      Consistency::Free, 0));
                ck.expect(trace.step_count() == 1 && trace.final_solution == ElementSet{n},
                          cell(inst, beta, 1) + ": minimal-only agent missed {y}");
                ck.expect(trace.ratio == Rat(1), cell(inst, beta, 1) + ": ratio is not 1");
            }
        }
    }
}

Instance random_min_instance(std::uint64_t seed, int max_ground) {
    std::mt19937_64 rng(seed);
    if (rng() % 2 == 0) {
        const int n = 3 + static_cast<int>(rng() % 3);                 // universe
        const int m = 3 + static_cast<int>(rng() % (max_ground - n));  // sampled sets
        const int d = 2 + static_cast<int>(rng() % 2);
        const int wmax = 1 + static_cast<int>(rng() % 8);
        return generators::random_d_cover(rng(), n, m, d, wmax);
    }
    const int n = 4 + static_cast<int>(rng() % (max_ground - 3));
    const int m = 3 + static_cast<int>(rng() % 4);
    const int d = 2 + static_cast<int>(rng() % 2);
    const int wmax = 1 + static_cast<int>(rng() % 8);
    return generators::random_d_hitting(rng(), n, std::min(m, n), std::min(d, n), wmax);
}

void c3_linear_bound(Suite suite, std::uint64_t seed, Checker& ck) {
    const int instances = suite == Suite::Full ? 500 : 60;
    for (int i = 0; i < instances; ++i) {
        Instance inst = random_min_instance(mix_seed(seed, 300 + i), 10);
        for (const Rat& beta : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            for (const Rat& alpha : {Rat(1), Rat(3, 2), Rat(2)}) {
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, alpha, Restriction::MinimalOnly,
                                      Consistency::Free, mix_seed(seed, i)));
                ck.expect(!trace.ratio_infinite &&
                              alpha_cost_ratio(trace) <= alpha * Rat(trace.step_count()),
                          cell(inst, beta, alpha) + ": ratio exceeds alpha*k");
            }
        }
    }
}

void c4_minor(Suite suite, std::uint64_t, Checker& ck) {
    const int n_max = suite == Suite::Full ? 10 : 6;
    for (int n = 2; n <= n_max; ++n) {
        for (int c : {2, 3, 5}) {
            for (const Rat& beta : betas_for_c(c, suite)) {
                Instance inst = generators::isc(n, c);
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, 1, Restriction::MinimalOnly,
                                      Consistency::Free, 0));
                MinorExtraction minor = extract_minor(trace, inst);
                ck.expect(!minor.replay.ratio_infinite && minor.replay.ratio == trace.ratio,
                          cell(inst, beta, 1) + ": replay ratio differs");
                ck.expect(minor.bundles_distinct,
                          cell(inst, beta, 1) + ": bundle distinctness failed");
            }
        }
    }
}

void c5_consistent(Suite suite, std::uint64_t seed, Checker& ck) {
    const int instances = suite == Suite::Full ? 500 : 60;
    for (int i = 0; i < instances; ++i) {
        Instance inst = random_min_instance(mix_seed(seed, 500 + i), 10);
        for (const Rat& beta : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            for (const Rat& alpha : {Rat(1), Rat(3, 2), Rat(2)}) {
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, alpha, Restriction::MinimalOnly,
                                      Consistency::ForbidInconsistent, mix_seed(seed, i)));
                ck.expect(!trace.ratio_infinite && trace.ratio <= alpha / beta,
                          cell(inst, beta, alpha) + ": ratio exceeds alpha/beta");
                if (trace.step_count() > 0) {
                    const ElementSet& s0 = trace.steps[0].evaluation.solution;
                    bool nested = true;
                    for (ElementId e : trace.final_solution) {
                        if (std::find(s0.begin(), s0.end(), e) == s0.end()) nested = false;
                    }
                    ck.expect(nested, cell(inst, beta, alpha) + ": final not within S_0");
                }
            }
        }
    }
}

void c6_min_overestimation(Suite suite, std::uint64_t seed, Checker& ck) {
    const int dags = suite == Suite::Full ? 250 : 40;
    const int insts = suite == Suite::Full ? 250 : 40;
    for (int i = 0; i < dags; ++i) {
        WeightedDag dag = random_dag(mix_seed(seed, 600 + i), 12, 9);
        const Int opt = brute_extremal(dag, Objective::Min);
        for (const Rat& beta : {Rat(3, 2), Rat(2), Rat(3)}) {
            WalkResult walk = biased_walk(dag, Bias{beta, Objective::Min, 1});
            ck.expect(walk.optimum == opt, "dag walk optimum disagrees with path scan");
            ck.expect(Rat(walk.length) <= beta * Rat(opt),
                      "dag walk beta=" + rat_string(beta) + ": length exceeds beta*opt");
        }
    }
    for (int i = 0; i < insts; ++i) {
        Instance inst = random_min_instance(mix_seed(seed, 650 + i), 10);
        const Int opt = brute_opt(inst, Objective::Min);
        for (const Rat& beta : {Rat(3, 2), Rat(2), Rat(3)}) {
            AgentTrace trace = run_agent(
                inst, make_config(Objective::Min, beta, 1, std::nullopt, Consistency::Free, 0));
            ck.expect(trace.opt == opt, cell(inst, beta, 1) + ": opt disagrees with scan");
            ck.expect(!trace.ratio_infinite && trace.ratio <= beta,
                      cell(inst, beta, 1) + ": ratio exceeds beta");
        }
    }
}

Instance random_max_instance(std::uint64_t seed, int max_ground) {
    std::mt19937_64 rng(seed);
    const int n = 4 + static_cast<int>(rng() % (max_ground - 3));
    const int wmax = 1 + static_cast<int>(rng() % 8);
    if (rng() % 2 == 0) return random_independent_set(rng(), n, wmax);
    return random_knapsack(rng(), n, wmax);
}

void c7_max_underestimation(Suite suite, std::uint64_t seed, Checker& ck) {
    const int dags = suite == Suite::Full ? 250 : 40;
    const int insts = suite == Suite::Full ? 250 : 40;
    for (int i = 0; i < dags; ++i) {
        WeightedDag dag = random_dag(mix_seed(seed, 700 + i), 12, 9);
        const Int opt = brute_extremal(dag, Objective::Max);
        for (const Rat& beta : {Rat(1, 3), Rat(1, 2), Rat(3, 4)}) {
            WalkResult walk = biased_walk(dag, Bias{beta, Objective::Max, 1});
            ck.expect(walk.optimum == opt, "dag walk optimum disagrees with path scan");
            ck.expect(!walk.ratio_infinite && walk.ratio <= 1 / beta,
                      "dag walk beta=" + rat_string(beta) + ": ratio exceeds 1/beta");
        }
    }
    for (int i = 0; i < insts; ++i) {
        Instance inst = random_max_instance(mix_seed(seed, 750 + i), 12);
        const Int opt = brute_opt(inst, Objective::Max);
        for (const Rat& beta : {Rat(1, 3), Rat(1, 2), Rat(3, 4)}) {
            AgentTrace trace = run_agent(
                inst, make_config(Objective::Max, beta, 1, std::nullopt, Consistency::Free, 0));
            ck.expect(trace.opt == opt, cell(inst, beta, 1) + ": opt disagrees with scan");
            ck.expect(!trace.ratio_infinite && trace.ratio <= 1 / beta,
                      cell(inst, beta, 1) + ": ratio exceeds 1/beta");
        }
    }
}

void c8_max_overestimation(Suite suite, std::uint64_t seed, Checker& ck) {
    const int dags = suite == Suite::Full ? 250 : 40;
    const int insts = suite == Suite::Full ? 250 : 40;
    for (int i = 0; i < dags; ++i) {
        WeightedDag dag = random_dag(mix_seed(seed, 800 + i), 12, 6);
        for (const Rat& beta : {Rat(3, 2), Rat(2)}) {
            WalkResult walk = biased_walk(dag, Bias{beta, Objective::Max, 1});
            const Rat rhs = Rat(walk.length) *
                            rat_pow(beta, walk.length.convert_to<std::uint64_t>());
            ck.expect(Rat(walk.optimum) <= rhs,
                      "dag walk beta=" + rat_string(beta) + ": opt exceeds c*beta^c");
        }
    }
    for (int i = 0; i < insts; ++i) {
        Instance inst = random_max_instance(mix_seed(seed, 850 + i), 12);
        for (const Rat& beta : {Rat(3, 2), Rat(2)}) {
            AgentTrace trace = run_agent(
                inst, make_config(Objective::Max, beta, 1, std::nullopt, Consistency::Free, 0));
            const BoundReport report = bound_report(trace, inst);
            const BoundEntry* e = report.find("MAX_OVER_EXP");
            ck.expect(e && e->applicable && e->holds,
                      cell(inst, beta, 1) + ": opt exceeds c*beta^c");
        }
    }
}

void c9_tightness(Suite suite, std::uint64_t, Checker& ck) {
    const int k_max = suite == Suite::Full ? 6 : 4;
    for (int k = 1; k <= k_max; ++k) {
        for (int beta_int : {2, 3}) {
            Instance inst = generators::gk(k, beta_int);
            const Rat beta(beta_int);
            AgentTrace trace = run_agent(
                inst, make_config(Objective::Max, beta, 1, std::nullopt, Consistency::Free, 0));
            Int opt_expect{1};
            for (int i = 0; i < k; ++i) opt_expect *= beta_int;
            ck.expect(trace.final_cost == k + 1,
                      cell(inst, beta, 1) + ": agent cost is not k+1");
            ck.expect(trace.opt == opt_expect, cell(inst, beta, 1) + ": opt is not beta^k");
            // ratio = beta^(c-1) / c with c = k+1.
            ck.expect(trace.ratio == rat_pow(beta, static_cast<std::uint64_t>(k)) / Rat(k + 1),
                      cell(inst, beta, 1) + ": ratio is not beta^(c-1)/c");
        }
    }
    const int knap_max = suite == Suite::Full ? 4 : 3;
    for (int k = 1; k <= knap_max; ++k) {
        for (int beta_int : {2, 3}) {
            Instance inst = generators::knapsack_family(k, beta_int);
            const Rat beta(beta_int);
            AgentTrace trace = run_agent(
                inst, make_config(Objective::Max, beta, 1, std::nullopt, Consistency::Free, 0));
            Int opt_expect{1};
            for (int i = 0; i < k; ++i) opt_expect *= beta_int;
            ck.expect(trace.opt == opt_expect,
                      cell(inst, beta, 1) + ": knapsack opt is not beta^k");
            ck.expect(trace.final_cost == k + 1,
                      cell(inst, beta, 1) + ": knapsack agent cost is not k+1");
        }
    }
}

void c10_dcover(Suite suite, std::uint64_t seed, Checker& ck) {
    const int instances = suite == Suite::Full ? 200 : 30;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(mix_seed(seed, 1000 + i));
        const int d = 2 + static_cast<int>(rng() % 2);
        const int n = 4 + static_cast<int>(rng() % 3);
        const int m = 3 + static_cast<int>(rng() % 4);
        const int wmax = 1 + static_cast<int>(rng() % 6);
        Instance inst = generators::random_d_cover(rng(), n, m, d, wmax);
        int d_actual = 0;
        for (const auto& s : inst.sets) d_actual = std::max(d_actual, static_cast<int>(s.size()));
        const Int opt = exact_opt(inst, Objective::Min).value;
        for (const Rat& alpha : {Rat(1), Rat(2)}) {
            for (const Rat& beta : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, alpha, Restriction::MinimalOnly,
                                      Consistency::Free, mix_seed(seed, i)));
                ck.expect(!trace.ratio_infinite &&
                              trace.ratio <= alpha * Rat(d_actual) * Rat(opt),
                          cell(inst, beta, alpha) + ": ratio exceeds alpha*d*opt");
                const BoundReport report = bound_report(trace, inst);
                const BoundEntry* e = report.find("DCOVER");
                ck.expect(e && e->applicable && e->holds,
                          cell(inst, beta, alpha) + ": DCOVER entry failed");
            }
        }
    }
}

void c11_dhitting(Suite suite, std::uint64_t seed, Checker& ck) {
    const int instances = suite == Suite::Full ? 200 : 30;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(mix_seed(seed, 1100 + i));
        const int n = 4 + static_cast<int>(rng() % 5);
        const int m = 3 + static_cast<int>(rng() % 4);
        Instance inst = generators::random_d_hitting(rng(), n, std::min(m, n), 2, 3);
        for (const Rat& alpha : {Rat(1), Rat(3, 2)}) {
            for (const Rat& beta : {Rat(1, 2), Rat(3, 4)}) {
                AgentTrace trace = run_agent(
                    inst, make_config(Objective::Min, beta, alpha, Restriction::MinimalOnly,
                                      Consistency::Free, mix_seed(seed, i)));
                const BoundReport report = bound_report(trace, inst);
                const BoundEntry* e = report.find("DHIT");
                ck.expect(e && e->applicable && e->holds,
                          cell(inst, beta, alpha) + ": DHIT bound failed");
                HitStepReport hit = dhit_step_bound(trace, inst);
                ck.expect(hit.step_bound_holds,
                          cell(inst, beta, alpha) + ": step count exceeds the claim");
                ck.expect(hit.steps <= inst.ground_size(),
                          cell(inst, beta, alpha) + ": more steps than ground elements");
                ck.expect(hit.private_sets_checked && hit.private_sets_ok,
                          cell(inst, beta, alpha) + ": private-set property failed");
            }
        }
    }
}

void c12_sunflower(Suite suite, std::uint64_t seed, Checker& ck) {
    const int families = suite == Suite::Full ? 200 : 50;
    for (int i = 0; i < families; ++i) {
        std::mt19937_64 rng(mix_seed(seed, 1200 + i));
        const int d = 1 + static_cast<int>(rng() % 3);
        const int k = 2 + static_cast<int>(rng() % 3);
        Int bound = int_factorial(d);
        for (int j = 0; j < d; ++j) bound *= (k - 1);
        const std::size_t threshold = bound.convert_to<std::size_t>() + 1;
        const int universe = 12 + static_cast<int>(rng() % 8);
        std::set<ElementSet> sets;
        while (sets.size() < threshold) {
            std::set<int> s;
            while (static_cast<int>(s.size()) < d) {
                s.insert(static_cast<int>(rng() % universe));
            }
            sets.insert(ElementSet(s.begin(), s.end()));
        }
        std::vector<ElementSet> family(sets.begin(), sets.end());
        auto sf = find_sunflower(family, k);
        ck.expect(sf.has_value(), "family above the threshold without a sunflower");
        if (sf) {
            ck.expect(static_cast<int>(sf->petals.size()) == k, "wrong petal count");
            ck.expect(validate_sunflower(family, *sf), "sunflower invariant failed");
        }
    }
}

void c13_akerlof(Suite, std::uint64_t, Checker& ck) {
    struct Config {
        int x, c;
        Rat beta;
    };
    const std::vector<Config> biased = {{1, 16, Rat(1, 2)}, {2, 9, Rat(1, 3)},
                                        {1, 4, Rat(1, 2)},  {3, 20, Rat(2, 3)}};
    for (const auto& cfgc : biased) {
        Rat previous{0};
        for (int n = 1; n <= 8; ++n) {
            WeightedDag dag = akerlof_graph(n, cfgc.x, cfgc.c);
            WalkResult walk = biased_walk(dag, Bias{cfgc.beta, Objective::Min, 1});
            std::vector<int> expect{0};
            for (int i = 1; i <= n; ++i) expect.push_back(1 + i);
            expect.push_back(1);
            ck.expect(walk.path == expect, "akerlof walk left the chain");
            ck.expect(walk.ratio == Rat(Int(n) * cfgc.x + cfgc.c, Int(cfgc.c)),
                      "akerlof ratio is not (n*x+c)/c");
            ck.expect(walk.ratio > previous, "akerlof ratio failed to grow with n");
            previous = walk.ratio;
        }
    }
    // At x + beta*c >= c the n = 5 walk goes straight to the sink;
    // indifference counts as going direct.
    for (const auto& [x, c, beta] :
         std::vector<Config>{{8, 16, Rat(1, 2)}, {9, 16, Rat(1, 2)}, {5, 6, Rat(1, 3)}}) {
        WalkResult walk = biased_walk(akerlof_graph(5, x, c), Bias{beta, Objective::Min, 1});
        ck.expect(walk.path == std::vector<int>{0, 1}, "walk should take s->t directly");
        ck.expect(walk.length == c, "direct walk length is not c");
    }
}

void c14_cross_oracle(Suite suite, std::uint64_t seed, Checker& ck) {
    std::vector<Instance> min_pool;
    for (int n = 1; n <= 4; ++n) {
        for (int c : {2, 3, 5}) min_pool.push_back(generators::isc(n, c));
    }
    for (int n = 2; n <= 7; ++n) min_pool.push_back(generators::superfluous_cover(n, 3));
    std::vector<Instance> max_pool;
    for (int k = 1; k <= 3; ++k) {
        max_pool.push_back(generators::gk(k, 2));
        max_pool.push_back(generators::knapsack_family(k, 2));
    }
    const int randoms = suite == Suite::Full ? 40 : 10;
    for (int i = 0; i < randoms; ++i) {
        std::mt19937_64 rng(mix_seed(seed, 1400 + i));
        Instance cover = generators::random_d_cover(rng(), 3 + static_cast<int>(rng() % 2),
                                                    3 + static_cast<int>(rng() % 2),
                                                    2 + static_cast<int>(rng() % 2),
                                                    1 + static_cast<int>(rng() % 9));
        if (cover.ground_size() <= 8) min_pool.push_back(cover);
        min_pool.push_back(generators::random_d_hitting(
            rng(), 4 + static_cast<int>(rng() % 5), 3 + static_cast<int>(rng() % 3), 2,
            1 + static_cast<int>(rng() % 9)));
        max_pool.push_back(random_independent_set(rng(), 4 + static_cast<int>(rng() % 5),
                                                  1 + static_cast<int>(rng() % 9)));
        max_pool.push_back(random_knapsack(rng(), 4 + static_cast<int>(rng() % 5),
                                           1 + static_cast<int>(rng() % 9)));
    }
    auto run_cell = [&](const Instance& inst, Objective obj, const Rat& beta) {
        AgentTrace trace = run_agent(
            inst, make_config(obj, beta, 1, Restriction::None, Consistency::Free, 0));
        WalkResult walk = biased_walk(instance_to_taskgraph(inst, obj), Bias{beta, obj, 1});
        ck.expect(walk.length == trace.final_cost,
                  cell(inst, beta, 1) + ": walk cost differs from the agent");
        ck.expect(walk.optimum == trace.opt,
                  cell(inst, beta, 1) + ": walk optimum differs from the agent");
    };
    for (const Instance& inst : min_pool) {
        for (const Rat& beta :
             {Rat(5, 13), Rat(8, 13), Rat(1), Rat(13, 8), Rat(2), Rat(3)}) {
            run_cell(inst, Objective::Min, beta);
        }
    }
    for (const Instance& inst : max_pool) {
        for (const Rat& beta : {Rat(5, 13), Rat(8, 13), Rat(1), Rat(13, 8), Rat(2)}) {
            run_cell(inst, Objective::Max, beta);
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_suite(Suite suite, std::uint64_t seed,
                                       std::ostream* progress) {
    struct Entry {
        int id;
        const char* name;
        void (*fn)(Suite, std::uint64_t, Checker&);
    };
    const std::vector<Entry> entries = {
        {1, "procrastination-family", c1_procrastination},
        {2, "superfluous-family", c2_superfluous},
        {3, "linear-bound", c3_linear_bound},
        {4, "minor-extraction", c4_minor},
        {5, "consistent-agent", c5_consistent},
        {6, "overestimating-minimizer", c6_min_overestimation},
        {7, "underestimating-maximizer", c7_max_underestimation},
        {8, "overestimating-maximizer", c8_max_overestimation},
        {9, "tightness-families", c9_tightness},
        {10, "d-set-cover-bound", c10_dcover},
        {11, "d-hitting-bound", c11_dhitting},
        {12, "sunflower", c12_sunflower},
        {13, "akerlof-walk", c13_akerlof},
        {14, "cross-oracle", c14_cross_oracle},
    };
    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        Checker ck;
        CriterionResult result;
        result.id = entry.id;
        result.name = entry.name;
        try {
            entry.fn(suite, seed, ck);
            result.passed = ck.failures == 0;
            result.checks = ck.checks;
            result.detail = ck.first_failure;
        } catch (const std::exception& e) {
            result.passed = false;
            result.checks = ck.checks;
            result.detail = std::string("exception: ") + e.what();
        }
        if (progress) {
            (*progress) << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " "
                        << result.name << " (" << result.checks << " checks)";
            if (!result.passed) (*progress) << " — " << result.detail;
            (*progress) << "\n" << std::flush;
        }
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace biaslab::acceptance
