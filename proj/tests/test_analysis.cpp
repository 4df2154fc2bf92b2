#include <doctest.h>

#include <random>
#include <set>

#include "biaslab/analysis.hpp"
#include "biaslab/generators.hpp"
#include "oracles.hpp"

using namespace biaslab;

namespace {

AgentTrace run_exact(const Instance& inst, Objective obj, const Rat& beta,
                     std::optional<Restriction> restriction = std::nullopt,
                     Consistency consistency = Consistency::Free) {
    AgentConfig cfg{Bias{beta, obj, 1}, EvaluatorSpec{EvalMode::Exact, 1, restriction},
                    consistency, 0};
    return run_agent(inst, cfg);
}

}  // namespace

TEST_CASE("bound report on the layered cover") {
    Instance inst = generators::isc(10, 3);
    AgentTrace trace = run_exact(inst, Objective::Min, Rat(1, 4));
    CHECK(trace.ratio == Rat(10, 3));
    CHECK(trace.step_count() == 10);
    BoundReport report = bound_report(trace, inst);

    const BoundEntry* linear = report.find("LINEAR_K");
    REQUIRE(linear);
    CHECK(linear->applicable);
    CHECK(linear->lhs == Rat(10, 3));
    CHECK(linear->rhs == Rat(10));
    CHECK(linear->holds);

    const BoundEntry* dcover = report.find("DCOVER");
    REQUIRE(dcover);
    CHECK(dcover->applicable);  // d = 10: the widest suffix set
    CHECK(dcover->rhs == Rat(10 * 3));
    CHECK(dcover->holds);

    CHECK_FALSE(report.find("MIN_OVER")->applicable);
    CHECK_FALSE(report.find("MAX_UNDER")->applicable);
    CHECK_FALSE(report.find("DHIT")->applicable);
    CHECK(report.all_applicable_hold());
}

TEST_CASE("bound report on the clique fan") {
    Instance inst = generators::gk(4, 2);
    AgentTrace trace = run_exact(inst, Objective::Max, Rat(2));
    BoundReport report = bound_report(trace, inst);

    const BoundEntry* exp = report.find("MAX_OVER_EXP");
    REQUIRE(exp);
    CHECK(exp->applicable);
    CHECK(exp->lhs == Rat(16));
    CHECK(exp->rhs == Rat(5 * 32));
    CHECK(exp->holds);

    const BoundEntry* log = report.find("MAX_OVER_LOG");
    REQUIRE(log);
    CHECK(log->applicable);
    CHECK(log->rhs == Rat(1024));  // (2*beta)^5
    CHECK(log->holds);

    // The lower-bound construction is tight: ratio = beta^(c-1) / c.
    CHECK(trace.ratio == rat_pow(Rat(2), 4) / Rat(5));
}

TEST_CASE("min over- and max under-estimation bounds on random instances") {
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = (trial % 2 == 0)
                            ? generators::random_d_cover(700 + trial, 6, 5, 3, 6)
                            : generators::random_d_hitting(700 + trial, 6, 6, 2, 6);
        for (const Rat& beta : {Rat(3, 2), Rat(2), Rat(3)}) {
            AgentTrace trace = run_exact(inst, Objective::Min, beta);
            BoundReport report = bound_report(trace, inst);
            const BoundEntry* e = report.find("MIN_OVER");
            REQUIRE(e);
            CHECK(e->applicable);
            CHECK(e->rhs == beta);
            CHECK(e->holds);
        }
    }
    for (int k : {1, 2, 3}) {
        for (const Rat& beta : {Rat(1, 3), Rat(1, 2), Rat(3, 4)}) {
            Instance inst = generators::gk(k, 2);
            AgentTrace trace = run_exact(inst, Objective::Max, beta);
            BoundReport report = bound_report(trace, inst);
            const BoundEntry* e = report.find("MAX_UNDER");
            REQUIRE(e);
            CHECK(e->applicable);
            CHECK(e->rhs == 1 / beta);
            CHECK(e->holds);
        }
    }
}

TEST_CASE("bound applicability respects the agent discipline") {
    Instance inst;
    inst.kind = ProblemKind::Explicit;
    inst.closure = FamilyClosure::Up;
    inst.family = {{0, 1}, {2}};
    inst.weights = {1, 100, 3};

    AgentTrace consistent = run_exact(inst, Objective::Min, Rat(1, 100),
                                      Restriction::MinimalOnly,
                                      Consistency::ForbidInconsistent);
    BoundReport report = bound_report(consistent, inst);
    // The linear bound belongs to the free discipline; this trace violates
    // its right-hand side and must be out of scope rather than failing.
    CHECK_FALSE(report.find("LINEAR_K")->applicable);
    CHECK(consistent.ratio > Rat(2));
    const BoundEntry* cons = report.find("CONSISTENT");
    REQUIRE(cons);
    CHECK(cons->applicable);
    CHECK(cons->rhs == Rat(100));
    CHECK(cons->holds);
    CHECK(report.all_applicable_hold());
}

TEST_CASE("minor extraction replays the layered-cover ratio") {
    Instance inst = generators::isc(4, 3);
    AgentTrace trace = run_exact(inst, Objective::Min, Rat(1, 4));
    MinorExtraction minor = extract_minor(trace, inst);

    CHECK(minor.minor.ground_size() == 8);
    // y weights are the residual optima opt(I_0..I_3) = 3,3,2,1.
    CHECK(minor.minor.weights == std::vector<Int>{1, 1, 1, 1, 3, 3, 2, 1});
    CHECK(minor.replay.ratio == trace.ratio);
    CHECK(minor.replay.final_solution == ElementSet{0, 1, 2, 3});
    CHECK(minor.bundles_distinct);

    SUBCASE("single-step traces extract J1") {
        Instance small = generators::isc(1, 2);
        AgentTrace t1 = run_exact(small, Objective::Min, Rat(1, 4));
        REQUIRE(t1.step_count() == 1);
        MinorExtraction m1 = extract_minor(t1, small);
        CHECK(m1.minor.ground_size() == 2);
        CHECK(m1.replay.ratio == t1.ratio);
        CHECK(m1.replay.final_solution == t1.final_solution);
    }
}

TEST_CASE("minor extraction refuses out-of-scope traces") {
    Instance inst = generators::isc(3, 2);
    SUBCASE("alpha > 1") {
        AgentConfig cfg{Bias{Rat(1, 4), Objective::Min, Rat(2)},
                        EvaluatorSpec{EvalMode::AdversarialAlpha, Rat(2), std::nullopt},
                        Consistency::Free, 0};
        AgentTrace trace = run_agent(inst, cfg);
        CHECK_THROWS_AS(extract_minor(trace, inst), InvalidInstanceError);
    }
    SUBCASE("beta >= 1") {
        AgentTrace trace = run_exact(inst, Objective::Min, Rat(2));
        CHECK_THROWS_AS(extract_minor(trace, inst), InvalidInstanceError);
    }
    SUBCASE("max objective") {
        Instance g = generators::gk(2, 2);
        AgentTrace trace = run_exact(g, Objective::Max, Rat(1, 2));
        CHECK_THROWS_AS(extract_minor(trace, g), InvalidInstanceError);
    }
}

TEST_CASE("minor extraction on random covers replays the ratio") {
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = generators::random_d_cover(900 + trial, 6, 5, 3, 6);
        for (const Rat& beta : {Rat(1, 4), Rat(1, 2), Rat(4, 5)}) {
            AgentTrace trace = run_exact(inst, Objective::Min, beta);
            if (trace.step_count() < 1) continue;
            MinorExtraction minor = extract_minor(trace, inst);
            CHECK(minor.replay.ratio == trace.ratio);
            CHECK(minor.replay.final_cost == trace.final_cost);
        }
    }
}

TEST_CASE("sunflower search, frozen examples") {
    SUBCASE("disjoint family is its own sunflower") {
        auto sf = find_sunflower({{1, 2}, {3, 4}, {5, 6}}, 3);
        REQUIRE(sf);
        CHECK(sf->petals == std::vector<int>{0, 1, 2});
        CHECK(sf->core.empty());
        CHECK(validate_sunflower({{1, 2}, {3, 4}, {5, 6}}, *sf));
    }
    SUBCASE("common element becomes the core") {
        std::vector<ElementSet> family{{1, 2}, {1, 3}, {1, 4}};
        auto sf = find_sunflower(family, 3);
        REQUIRE(sf);
        CHECK(sf->core == ElementSet{1});
        CHECK(sf->petals.size() == 3);
        CHECK(validate_sunflower(family, *sf));
    }
    SUBCASE("absent when the family is too small") {
        CHECK_FALSE(find_sunflower({{1, 2}, {1, 3}, {2, 3}}, 3).has_value());
    }
    SUBCASE("mixed sizes are rejected") {
        CHECK_THROWS_AS(find_sunflower({{1, 2}, {3}}, 2), InvalidInstanceError);
    }
    SUBCASE("single petal") {
        auto sf = find_sunflower({{1, 2}}, 1);
        REQUIRE(sf);
        CHECK(sf->petals == std::vector<int>{0});
        CHECK(validate_sunflower({{1, 2}}, *sf));
    }
}

TEST_CASE("sunflower lemma threshold, randomized") {
    std::mt19937_64 rng(3);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const int k = 2 + static_cast<int>(rng() % 3);
        std::size_t threshold = 1;
        Int fact = int_factorial(d);
        Int bound = fact;
        for (int i = 0; i < d; ++i) bound *= (k - 1);
        threshold = bound.convert_to<std::size_t>() + 1;
        const int universe = 4 + static_cast<int>(rng() % 24);
        std::set<ElementSet> sets;
        int attempts = 0;
        while (sets.size() < threshold && attempts < 100000) {
            ++attempts;
            std::set<int> s;
            while (static_cast<int>(s.size()) < d) {
                s.insert(static_cast<int>(rng() % universe));
            }
            sets.insert(ElementSet(s.begin(), s.end()));
        }
        if (sets.size() < threshold) continue;  // universe too small to reach it
        std::vector<ElementSet> family(sets.begin(), sets.end());
        auto sf = find_sunflower(family, k);
        REQUIRE(sf);
        CHECK(static_cast<int>(sf->petals.size()) == k);
        CHECK(validate_sunflower(family, *sf));
        ++found;
    }
    CHECK(found >= 30);
}

TEST_CASE("hitting-set step bound and private sets") {
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = generators::random_d_hitting(1300 + trial, 7, 6, 2, 4);
        AgentTrace trace = run_exact(inst, Objective::Min, Rat(1, 2));
        HitStepReport report = dhit_step_bound(trace, inst);
        CHECK(report.step_bound_holds);
        CHECK(report.steps <= inst.ground_size());
        CHECK(report.private_sets_checked);
        CHECK(report.private_sets_ok);
        // DHIT in the bound report agrees.
        BoundReport report2 = bound_report(trace, inst);
        const BoundEntry* e = report2.find("DHIT");
        REQUIRE(e);
        CHECK(e->applicable);
        CHECK(e->holds);
    }
    SUBCASE("single-set family finishes in one step") {
        Instance inst = generators::random_d_hitting(7, 5, 1, 2, 3);
        AgentTrace trace = run_exact(inst, Objective::Min, Rat(1, 2));
        HitStepReport report = dhit_step_bound(trace, inst);
        CHECK(report.steps == 1);
        CHECK(report.step_bound_holds);
    }
}
