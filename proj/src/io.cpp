#include "biaslab/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

namespace biaslab::io {

namespace {

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) {
        return Int{j.get<long long>()};
    }
    if (j.is_string()) {
        Rat r = parse_rational(j.get<std::string>());
        if (denominator(r) != 1) throw ParseError(std::string(what) + " must be an integer");
        return numerator(r);
    }
    throw ParseError(std::string(what) + " must be an integer or integer string");
}

json int_to_json(const Int& v) {
    // Weights and costs are desk scale; emit native integers when they fit.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Rat rat_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat{j.get<long long>()};
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(std::string(what) + " must be an integer or a \"p/q\" string");
}

ElementSet set_from_json(const json& j) {
    ElementSet s = j.get<ElementSet>();
    return s;
}

}  // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["schema"] = kInstanceSchema;
    j["kind"] = kind_string(inst.kind);
    json weights = json::array();
    for (const Int& w : inst.weights) weights.push_back(int_to_json(w));
    j["weights"] = std::move(weights);
    if (!inst.labels.empty()) j["labels"] = inst.labels;
    switch (inst.kind) {
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet:
            j["universe"] = inst.universe;
            j["sets"] = inst.sets;
            break;
        case ProblemKind::IndependentSet: {
            json edges = json::array();
            for (auto [u, v] : inst.edges) edges.push_back(json::array({u, v}));
            j["edges"] = std::move(edges);
            break;
        }
        case ProblemKind::Knapsack: {
            json values = json::array(), loads = json::array();
            for (const Int& w : inst.weights) values.push_back(int_to_json(w));
            for (const Int& l : inst.loads) loads.push_back(int_to_json(l));
            j["values"] = std::move(values);
            j["loads"] = std::move(loads);
            j["capacity"] = int_to_json(inst.capacity);
            break;
        }
        case ProblemKind::Explicit:
            j["family"] = inst.family;
            j["closure"] = inst.closure == FamilyClosure::Up ? "up" : "raw";
            break;
    }
    if (!inst.committed.empty()) j["committed"] = inst.committed;
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != kInstanceSchema) {
        throw ParseError("not a biaslab/instance/v1 document");
    }
    Instance inst;
    inst.kind = kind_from_string(j.at("kind").get<std::string>());
    for (const auto& w : j.at("weights")) inst.weights.push_back(int_from_json(w, "weight"));
    if (j.contains("labels")) inst.labels = j.at("labels").get<std::vector<std::string>>();
    switch (inst.kind) {
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet:
            inst.universe = j.at("universe").get<int>();
            for (const auto& s : j.at("sets")) inst.sets.push_back(set_from_json(s));
            break;
        case ProblemKind::IndependentSet:
            for (const auto& e : j.at("edges")) {
                inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            }
            break;
        case ProblemKind::Knapsack: {
            std::vector<Int> values;
            for (const auto& v : j.at("values")) values.push_back(int_from_json(v, "value"));
            if (values != inst.weights) {
                throw ParseError("knapsack values must equal the weights field");
            }
            for (const auto& l : j.at("loads")) inst.loads.push_back(int_from_json(l, "load"));
            inst.capacity = int_from_json(j.at("capacity"), "capacity");
            break;
        }
        case ProblemKind::Explicit: {
            for (const auto& s : j.at("family")) inst.family.push_back(set_from_json(s));
            const std::string closure = j.at("closure").get<std::string>();
            if (closure == "up") {
                inst.closure = FamilyClosure::Up;
            } else if (closure == "raw") {
                inst.closure = FamilyClosure::Raw;
            } else {
                throw ParseError("closure must be \"up\" or \"raw\"");
            }
            break;
        }
    }
    if (j.contains("committed")) inst.committed = j.at("committed").get<ElementSet>();
    inst.validate();
    return inst;
}

json dag_to_json(const WeightedDag& dag) {
    json j;
    j["schema"] = kDagSchema;
    j["n"] = dag.vertex_count;
    json arcs = json::array();
    for (const auto& a : dag.arcs) {
        arcs.push_back(json::array({a.from, a.to, int_to_json(a.weight)}));
    }
    j["arcs"] = std::move(arcs);
    j["s"] = dag.source;
    j["t"] = dag.sink;
    return j;
}

WeightedDag dag_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != kDagSchema) {
        throw ParseError("not a biaslab/dag/v1 document");
    }
    WeightedDag dag;
    dag.vertex_count = j.at("n").get<int>();
    for (const auto& a : j.at("arcs")) {
        dag.arcs.push_back(
            {a.at(0).get<int>(), a.at(1).get<int>(), int_from_json(a.at(2), "arc weight")});
    }
    dag.source = j.at("s").get<int>();
    dag.sink = j.at("t").get<int>();
    dag.validate();
    return dag;
}

namespace {

json config_to_json(const AgentConfig& cfg) {
    json j;
    j["beta"] = rat_string(cfg.bias.beta);
    j["objective"] = objective_string(cfg.bias.objective);
    j["alpha"] = rat_string(cfg.bias.alpha);
    j["mode"] = eval_mode_string(cfg.evaluator.mode);
    j["restriction"] = restriction_string(cfg.effective_restriction());
    j["consistency"] = consistency_string(cfg.consistency);
    j["seed"] = cfg.seed;
    return j;
}

AgentConfig config_from_json(const json& j) {
    AgentConfig cfg;
    cfg.bias.beta = rat_from_json(j.at("beta"), "beta");
    cfg.bias.objective = objective_from_string(j.at("objective").get<std::string>());
    cfg.bias.alpha = rat_from_json(j.at("alpha"), "alpha");
    cfg.evaluator.mode = eval_mode_from_string(j.at("mode").get<std::string>());
    cfg.evaluator.alpha = cfg.bias.alpha;
    cfg.evaluator.restriction = restriction_from_string(j.at("restriction").get<std::string>());
    cfg.consistency = consistency_from_string(j.at("consistency").get<std::string>());
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.validate();
    return cfg;
}

json ratio_to_json(const Rat& ratio, bool infinite) {
    if (infinite) return "inf";
    return rat_string(ratio);
}

}  // namespace

json trace_to_json(const AgentTrace& trace) {
    json j;
    j["schema"] = kTraceSchema;
    j["instance_digest"] = trace.instance_digest;
    j["config"] = config_to_json(trace.config);
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json rec;
        rec["step"] = s.step;
        rec["solution"] = s.evaluation.solution;
        rec["pivot"] = s.evaluation.pivot;
        rec["biased_value"] = rat_string(s.evaluation.biased_value);
        rec["committed"] = s.committed_after;
        rec["residual_opt"] = int_to_json(s.residual_opt);
        steps.push_back(std::move(rec));
    }
    j["steps"] = std::move(steps);
    j["final_solution"] = trace.final_solution;
    j["final_cost"] = int_to_json(trace.final_cost);
    j["opt"] = int_to_json(trace.opt);
    j["ratio"] = ratio_to_json(trace.ratio, trace.ratio_infinite);
    return j;
}

AgentTrace trace_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != kTraceSchema) {
        throw ParseError("not a biaslab/trace/v1 document");
    }
    AgentTrace trace;
    trace.instance_digest = j.at("instance_digest").get<std::string>();
    trace.config = config_from_json(j.at("config"));
    for (const auto& s : j.at("steps")) {
        StepRecord rec;
        rec.step = s.at("step").get<int>();
        rec.evaluation.solution = s.at("solution").get<ElementSet>();
        rec.evaluation.pivot = s.at("pivot").get<ElementId>();
        rec.evaluation.biased_value = rat_from_json(s.at("biased_value"), "biased_value");
        rec.committed_after = s.at("committed").get<ElementSet>();
        rec.residual_opt = int_from_json(s.at("residual_opt"), "residual_opt");
        trace.steps.push_back(std::move(rec));
    }
    trace.final_solution = j.at("final_solution").get<ElementSet>();
    trace.final_cost = int_from_json(j.at("final_cost"), "final_cost");
    trace.opt = int_from_json(j.at("opt"), "opt");
    if (j.at("ratio").is_string() && j.at("ratio").get<std::string>() == "inf") {
        trace.ratio_infinite = true;
    } else {
        trace.ratio = rat_from_json(j.at("ratio"), "ratio");
    }
    return trace;
}

json report_to_json(const BoundReport& report, const AgentTrace& trace) {
    json j;
    j["schema"] = kReportSchema;
    j["trace_digest"] = trace_digest(trace);
    json context;
    context["beta"] = rat_string(trace.config.bias.beta);
    context["alpha"] = rat_string(trace.config.bias.alpha);
    context["objective"] = objective_string(trace.config.bias.objective);
    context["steps"] = trace.step_count();
    context["cost"] = int_to_json(trace.final_cost);
    context["opt"] = int_to_json(trace.opt);
    context["ratio"] = ratio_to_json(trace.ratio, trace.ratio_infinite);
    j["context"] = std::move(context);
    json bounds = json::array();
    for (const auto& e : report.entries) {
        json b;
        b["name"] = e.name;
        b["applicable"] = e.applicable;
        b["holds"] = e.holds;
        b["lhs"] = e.lhs_infinite ? json("inf") : json(rat_string(e.lhs));
        b["rhs"] = rat_string(e.rhs);
        // Human-readable rendering of the (1 + log beta) * opt / log opt
        // form; the pass/fail verdict above never depends on it.
        if (e.name == "MAX_OVER_LOG" && e.applicable && trace.opt > 1) {
            const double beta = static_cast<double>(trace.config.bias.beta);
            const double opt = static_cast<double>(trace.opt);
            std::ostringstream display;
            display << (1.0 + std::log2(beta)) * opt / std::log2(opt);
            b["display_corollary_bound"] = display.str();
        }
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    return j;
}

BoundReport report_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != kReportSchema) {
        throw ParseError("not a biaslab/report/v1 document");
    }
    BoundReport report;
    for (const auto& b : j.at("bounds")) {
        BoundEntry e;
        e.name = b.at("name").get<std::string>();
        e.applicable = b.at("applicable").get<bool>();
        e.holds = b.at("holds").get<bool>();
        if (b.at("lhs").is_string() && b.at("lhs").get<std::string>() == "inf") {
            e.lhs_infinite = true;
        } else {
            e.lhs = rat_from_json(b.at("lhs"), "lhs");
        }
        e.rhs = rat_from_json(b.at("rhs"), "rhs");
        report.entries.push_back(std::move(e));
    }
    return report;
}

json walk_to_json(const WalkResult& walk, const Bias& bias) {
    json j;
    j["schema"] = kWalkSchema;
    j["beta"] = rat_string(bias.beta);
    j["objective"] = objective_string(bias.objective);
    j["path"] = walk.path;
    j["length"] = int_to_json(walk.length);
    j["optimum"] = int_to_json(walk.optimum);
    j["ratio"] = ratio_to_json(walk.ratio, walk.ratio_infinite);
    return j;
}

std::string trace_digest(const AgentTrace& trace) {
    const std::string text = trace_to_json(trace).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void write_csv_header(std::ostream& out) {
    out << "trace_id,beta,alpha,objective,steps,cost,opt,ratio,bound,lhs,rhs,holds\n";
}

void write_csv_rows(std::ostream& out, const AgentTrace& trace, const BoundReport& report) {
    const std::string id = trace_digest(trace);
    const std::string prefix = id + "," + rat_string(trace.config.bias.beta) + "," +
                               rat_string(trace.config.bias.alpha) + "," +
                               objective_string(trace.config.bias.objective) + "," +
                               std::to_string(trace.step_count()) + "," +
                               trace.final_cost.str() + "," + trace.opt.str() + "," +
                               (trace.ratio_infinite ? "inf" : rat_string(trace.ratio));
    for (const auto& e : report.entries) {
        if (!e.applicable) continue;
        out << prefix << "," << e.name << "," << (e.lhs_infinite ? "inf" : rat_string(e.lhs))
            << "," << rat_string(e.rhs) << "," << (e.holds ? "true" : "false") << "\n";
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace biaslab::io
