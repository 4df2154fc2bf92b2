// biaslab command line: generate instances, run biased agents and walks,
// sweep parameter grids, and verify the bound suite.
//
// Exit codes: 0 success, 2 usage or input error, 3 bound or verification
// failure.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "biaslab/acceptance.hpp"
#include "biaslab/io.hpp"

using namespace biaslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBoundViolation = 3;

std::vector<Rat> parse_grid(const std::string& text, const char* what) {
    std::vector<Rat> grid;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            try {
                grid.push_back(parse_rational(item));
            } catch (const ParseError& e) {
                throw ParseError(std::string(what) + ": " + e.what());
            }
        }
    }
    return grid;
}

struct RunOptions {
    std::string instance_path;
    std::string beta = "1/2";
    std::string alpha = "1";
    std::string objective = "auto";
    std::string restriction = "default";
    std::string consistency = "free";
    std::uint64_t seed = 0;
    std::string emit = "both";
    std::string out_dir = ".";
};

AgentConfig build_config(const Instance& inst, const Rat& beta, const Rat& alpha,
                         const std::string& objective, const std::string& restriction,
                         const std::string& consistency, std::uint64_t seed) {
    AgentConfig cfg;
    cfg.bias.beta = beta;
    cfg.bias.alpha = alpha;
    cfg.bias.objective = objective == "auto" ? inst.natural_objective()
                                             : objective_from_string(objective);
    cfg.evaluator.mode = alpha == 1 ? EvalMode::Exact : EvalMode::AdversarialAlpha;
    cfg.evaluator.alpha = alpha;
    if (restriction != "default") {
        cfg.evaluator.restriction = restriction_from_string(restriction);
    }
    cfg.consistency = consistency_from_string(consistency);
    cfg.seed = seed;
    cfg.validate();
    return cfg;
}

std::string bounds_summary(const BoundReport& report) {
    return std::to_string(report.passed_count()) + "/" +
           std::to_string(report.applicable_count());
}

int cmd_run(const RunOptions& opt) {
    Instance inst = io::instance_from_json(io::load_json_file(opt.instance_path));
    AgentConfig cfg = build_config(inst, parse_rational(opt.beta), parse_rational(opt.alpha),
                                   opt.objective, opt.restriction, opt.consistency, opt.seed);
    AgentTrace trace = run_agent(inst, cfg);
    BoundReport report = bound_report(trace, inst);

    std::filesystem::create_directories(opt.out_dir);
    const std::string stem =
        (std::filesystem::path(opt.out_dir) /
         (std::filesystem::path(opt.instance_path).stem().string() + "-" +
          io::trace_digest(trace).substr(0, 8)))
            .string();
    if (opt.emit == "trace" || opt.emit == "both") {
        io::save_json_file(stem + ".trace.json", io::trace_to_json(trace));
    }
    if (opt.emit == "report" || opt.emit == "both") {
        io::save_json_file(stem + ".report.json", io::report_to_json(report, trace));
    }

    std::cout << "ratio=" << (trace.ratio_infinite ? "inf" : rat_string(trace.ratio))
              << " steps=" << trace.step_count() << " opt=" << trace.opt.str()
              << " cost=" << trace.final_cost.str() << " bounds=" << bounds_summary(report)
              << "\n";
    return report.all_applicable_hold() ? kExitOk : kExitBoundViolation;
}

int cmd_walk(const std::string& dag_path, const std::string& beta,
             const std::string& objective, const std::string& out_path) {
    WeightedDag dag = io::dag_from_json(io::load_json_file(dag_path));
    Bias bias{parse_rational(beta),
              objective == "max" ? Objective::Max : Objective::Min, 1};
    WalkResult walk = biased_walk(dag, bias);
    if (!out_path.empty()) io::save_json_file(out_path, io::walk_to_json(walk, bias));
    std::cout << "length=" << walk.length.str() << " optimum=" << walk.optimum.str()
              << " ratio=" << (walk.ratio_infinite ? "inf" : rat_string(walk.ratio))
              << " path_arcs=" << walk.path.size() - 1 << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& instance_path, const std::string& beta_grid,
              const std::string& alpha_grid, const std::string& objective,
              const std::string& restriction, const std::string& consistency,
              std::uint64_t seed, const std::string& out_csv) {
    Instance inst = io::instance_from_json(io::load_json_file(instance_path));
    const std::vector<Rat> betas = parse_grid(beta_grid, "beta grid");
    const std::vector<Rat> alphas = parse_grid(alpha_grid, "alpha grid");

    struct Cell {
        AgentTrace trace;
        BoundReport report;
    };
    // Cells are independent pure computations; evaluate them concurrently
    // and emit in grid order regardless of completion order.
    std::vector<std::future<Cell>> cells;
    for (const Rat& beta : betas) {
        for (const Rat& alpha : alphas) {
            cells.push_back(std::async(std::launch::async, [&, beta, alpha] {
                AgentConfig cfg = build_config(inst, beta, alpha, objective, restriction,
                                               consistency, seed);
                Cell cell;
                cell.trace = run_agent(inst, cfg);
                cell.report = bound_report(cell.trace, inst);
                return cell;
            }));
        }
    }
    std::ofstream out(out_csv);
    if (!out) throw Error("cannot write " + out_csv);
    io::write_csv_header(out);
    bool all_hold = true;
    for (auto& fut : cells) {
        Cell cell = fut.get();
        io::write_csv_rows(out, cell.trace, cell.report);
        all_hold = all_hold && cell.report.all_applicable_hold();
    }
    std::cout << "cells=" << cells.size() << " csv=" << out_csv << "\n";
    return all_hold ? kExitOk : kExitBoundViolation;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    const auto results =
        acceptance::run_suite(acceptance::suite_from_string(suite), seed, &std::cout);
    return acceptance::all_passed(results) ? kExitOk : kExitBoundViolation;
}

void save_instance(const Instance& inst, const std::string& out_path) {
    io::save_json_file(out_path, io::instance_to_json(inst));
    std::cout << "digest=" << instance_digest(inst) << " file=" << out_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"present-biased planning lab: generators, agents, walks, bound checks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write an instance or DAG file");
    gen->require_subcommand(1);
    std::string out_path = "instance.json";
    int gn = 3, gc = 2, gk = 2, gbeta = 2, gm = 4, gd = 2, gwmax = 5;
    std::uint64_t gseed = 0;
    std::string gx = "1";
    std::string wx_csv, wy_csv;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", out_path, "output path")->capture_default_str();
    };
    auto* g_superfluous = gen->add_subcommand("superfluous", "singletons plus one covering set");
    g_superfluous->add_option("--n", gn)->required();
    g_superfluous->add_option("--c", gc)->required();
    add_out(g_superfluous);
    auto* g_isc = gen->add_subcommand("isc", "layered cover with suffix sets");
    g_isc->add_option("--n", gn)->required();
    g_isc->add_option("--c", gc)->required();
    add_out(g_isc);
    auto* g_jn = gen->add_subcommand("jn", "raw minor family");
    g_jn->add_option("--n", gn)->required();
    g_jn->add_option("--wx", wx_csv, "comma-separated x weights")->required();
    g_jn->add_option("--wy", wy_csv, "comma-separated y weights")->required();
    add_out(g_jn);
    auto* g_gk = gen->add_subcommand("gk", "clique-fan independent set family");
    g_gk->add_option("--k", gk)->required();
    g_gk->add_option("--beta", gbeta, "integer beta >= 2")->required();
    add_out(g_gk);
    auto* g_knap = gen->add_subcommand("knapsack", "geometric-value knapsack family");
    g_knap->add_option("--k", gk)->required();
    g_knap->add_option("--beta", gbeta, "integer beta >= 2")->required();
    add_out(g_knap);
    auto* g_rcover = gen->add_subcommand("random-cover", "seeded random d-set cover");
    g_rcover->add_option("--seed", gseed)->required();
    g_rcover->add_option("--n", gn)->required();
    g_rcover->add_option("--m", gm)->required();
    g_rcover->add_option("--d", gd)->required();
    g_rcover->add_option("--wmax", gwmax)->required();
    add_out(g_rcover);
    auto* g_rhit = gen->add_subcommand("random-hitting", "seeded random d-hitting set");
    g_rhit->add_option("--seed", gseed)->required();
    g_rhit->add_option("--n", gn)->required();
    g_rhit->add_option("--m", gm)->required();
    g_rhit->add_option("--d", gd)->required();
    g_rhit->add_option("--wmax", gwmax)->required();
    add_out(g_rhit);
    auto* g_akerlof = gen->add_subcommand("akerlof", "procrastination DAG");
    g_akerlof->add_option("--n", gn)->required();
    g_akerlof->add_option("--x", gx, "chain arc weight")->required();
    g_akerlof->add_option("--c", gc, "completion arc weight")->required();
    add_out(g_akerlof);
    auto* g_embed = gen->add_subcommand("embed", "task-graph embedding of an instance");
    std::string embed_input, embed_objective = "auto";
    g_embed->add_option("instance", embed_input, "instance JSON")->required();
    g_embed->add_option("--objective", embed_objective)
        ->check(CLI::IsMember({"auto", "min", "max"}));
    add_out(g_embed);

    // run
    auto* run = app.add_subcommand("run", "run the biased agent on an instance");
    RunOptions ropt;
    run->add_option("instance", ropt.instance_path, "instance JSON")->required();
    run->add_option("--beta", ropt.beta, "degree of bias, p/q or integer")->required();
    run->add_option("--alpha", ropt.alpha)->capture_default_str();
    run->add_option("--objective", ropt.objective)
        ->check(CLI::IsMember({"auto", "min", "max"}))
        ->capture_default_str();
    run->add_option("--restriction", ropt.restriction)
        ->check(CLI::IsMember({"default", "none", "minimal_only", "maximal_only"}))
        ->capture_default_str();
    run->add_option("--consistency", ropt.consistency)
        ->check(CLI::IsMember({"free", "forbid_inconsistent"}))
        ->capture_default_str();
    run->add_option("--seed", ropt.seed)->capture_default_str();
    run->add_option("--emit", ropt.emit)
        ->check(CLI::IsMember({"trace", "report", "both"}))
        ->capture_default_str();
    run->add_option("--out-dir", ropt.out_dir)->capture_default_str();

    // walk
    auto* walk = app.add_subcommand("walk", "biased walk on a weighted DAG");
    std::string walk_dag, walk_beta = "1/2", walk_objective = "min", walk_out;
    walk->add_option("dag", walk_dag, "DAG JSON")->required();
    walk->add_option("--beta", walk_beta)->required();
    walk->add_option("--objective", walk_objective)->check(CLI::IsMember({"min", "max"}));
    walk->add_option("--out", walk_out, "walk JSON output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid of runs, flat CSV of bounds");
    std::string sweep_instance, sweep_betas, sweep_alphas = "1", sweep_csv = "sweep.csv";
    std::string sweep_objective = "auto", sweep_restriction = "default",
                sweep_consistency = "free";
    std::uint64_t sweep_seed = 0;
    sweep->add_option("instance", sweep_instance)->required();
    sweep->add_option("--beta-grid", sweep_betas, "comma-separated rationals")->required();
    sweep->add_option("--alpha-grid", sweep_alphas)->capture_default_str();
    sweep->add_option("--objective", sweep_objective)
        ->check(CLI::IsMember({"auto", "min", "max"}));
    sweep->add_option("--restriction", sweep_restriction)
        ->check(CLI::IsMember({"default", "none", "minimal_only", "maximal_only"}));
    sweep->add_option("--consistency", sweep_consistency)
        ->check(CLI::IsMember({"free", "forbid_inconsistent"}));
    sweep->add_option("--seed", sweep_seed);
    sweep->add_option("-o,--out", sweep_csv)->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria suite");
    std::string verify_suite = "quick";
    std::uint64_t verify_seed = 0;
    verify->add_option("--suite", verify_suite)->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", verify_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (g_superfluous->parsed()) {
            save_instance(generators::superfluous_cover(gn, gc), out_path);
        } else if (g_isc->parsed()) {
            save_instance(generators::isc(gn, gc), out_path);
        } else if (g_jn->parsed()) {
            std::vector<Int> wx, wy;
            for (const Rat& r : parse_grid(wx_csv, "wx")) wx.push_back(numerator(r));
            for (const Rat& r : parse_grid(wy_csv, "wy")) wy.push_back(numerator(r));
            save_instance(generators::jn(gn, wx, wy), out_path);
        } else if (g_gk->parsed()) {
            save_instance(generators::gk(gk, gbeta), out_path);
        } else if (g_knap->parsed()) {
            save_instance(generators::knapsack_family(gk, gbeta), out_path);
        } else if (g_rcover->parsed()) {
            save_instance(generators::random_d_cover(gseed, gn, gm, gd, gwmax), out_path);
        } else if (g_rhit->parsed()) {
            save_instance(generators::random_d_hitting(gseed, gn, gm, gd, gwmax), out_path);
        } else if (g_akerlof->parsed()) {
            WeightedDag dag = akerlof_graph(gn, numerator(parse_rational(gx)), gc);
            io::save_json_file(out_path, io::dag_to_json(dag));
            std::cout << "vertices=" << dag.vertex_count << " arcs=" << dag.arcs.size()
                      << " file=" << out_path << "\n";
        } else if (g_embed->parsed()) {
            Instance inst = io::instance_from_json(io::load_json_file(embed_input));
            const Objective obj = embed_objective == "auto"
                                      ? inst.natural_objective()
                                      : objective_from_string(embed_objective);
            WeightedDag dag = instance_to_taskgraph(inst, obj);
            io::save_json_file(out_path, io::dag_to_json(dag));
            std::cout << "vertices=" << dag.vertex_count << " arcs=" << dag.arcs.size()
                      << " file=" << out_path << "\n";
        } else if (run->parsed()) {
            return cmd_run(ropt);
        } else if (walk->parsed()) {
            return cmd_walk(walk_dag, walk_beta, walk_objective, walk_out);
        } else if (sweep->parsed()) {
            return cmd_sweep(sweep_instance, sweep_betas, sweep_alphas, sweep_objective,
                             sweep_restriction, sweep_consistency, sweep_seed, sweep_csv);
        } else if (verify->parsed()) {
            return cmd_verify(verify_suite, verify_seed);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
