#pragma once

#include <iosfwd>

#include "biaslab/analysis.hpp"
#include "biaslab/generators.hpp"
#include "biaslab/taskgraph.hpp"

namespace biaslab::acceptance {

/// Quick trims the grids to run in seconds; Full runs the complete
/// verification grids.
enum class Suite { Quick, Full };

Suite suite_from_string(std::string_view s);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    long long checks = 0;
    std::string detail;  // first failure, or empty
};

/// Runs every criterion, printing one PASS/FAIL line per criterion to
/// `progress` when given. The seed offsets the random families; the
/// deterministic grids are unaffected.
std::vector<CriterionResult> run_suite(Suite suite, std::uint64_t seed, std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

// Seeded harness generators shared by the verification suite.
WeightedDag random_dag(std::uint64_t seed, int max_vertices, int wmax);
Instance random_independent_set(std::uint64_t seed, int n, int wmax);
Instance random_knapsack(std::uint64_t seed, int n, int wmax);

}  // namespace biaslab::acceptance
