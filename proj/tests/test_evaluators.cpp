#include <doctest.h>

#include <random>

#include "biaslab/evaluators.hpp"
#include "biaslab/generators.hpp"
#include "oracles.hpp"

using namespace biaslab;

namespace {

std::vector<Instance> small_pool() {
    return {
        generators::isc(2, 3),
        generators::isc(3, 2),
        generators::superfluous_cover(3, 2),
        generators::gk(2, 2),
        generators::gk(3, 2),
        generators::knapsack_family(2, 2),
        generators::random_d_cover(21, 5, 4, 2, 5),
        generators::random_d_cover(22, 6, 5, 3, 3),
        generators::random_d_hitting(23, 6, 5, 2, 5),
        generators::random_d_hitting(24, 5, 6, 3, 3),
        generators::jn(3, {1, 1, 1}, {3, 3, 3}),
    };
}

}  // namespace

TEST_CASE("exact biased optimum on the layered cover, frozen") {
    Instance inst = generators::isc(2, 3);
    Bias b{Rat(1, 4), Objective::Min, 1};
    // Minimal candidates and their biased costs: {y1}: 3, {x1,y2}: 7/4,
    // {x1,x2}: 5/4.
    Evaluation ev = exact_biased_optimum(inst, b, Restriction::MinimalOnly);
    CHECK(ev.solution == ElementSet{0, 1});
    CHECK(ev.biased_value == Rat(5, 4));
    CHECK(ev.pivot == 0);
}

TEST_CASE("exact biased optimum on the clique fan, frozen") {
    Instance inst = generators::gk(4, 2);
    Bias b{Rat(2), Objective::Max, 1};
    // c_beta({y4,x3}) = 1 + 2*8 = 17 beats c_beta({x4}) = 16.
    Evaluation ev = exact_biased_optimum(inst, b, Restriction::MaximalOnly);
    CHECK(ev.solution == ElementSet{3, 7});  // y4, x3
    CHECK(ev.biased_value == Rat(17));
    CHECK(ev.pivot == 3);  // y4
}

TEST_CASE("beta = 1 returns a plain optimum") {
    for (const Instance& inst : small_pool()) {
        const Objective obj = inst.natural_objective();
        Bias b{Rat(1), obj, 1};
        Evaluation ev = exact_biased_optimum(inst, b, Restriction::None);
        CHECK(plain_cost(inst, ev.solution) == exact_opt(inst, obj).value);
        CHECK(ev.biased_value == Rat(exact_opt(inst, obj).value));
    }
}

TEST_CASE("exact biased optimum matches the subset-scan oracle") {
    for (const Instance& inst : small_pool()) {
        const Objective obj = inst.natural_objective();
        for (const Rat& beta : {Rat(1, 4), Rat(1, 2), Rat(9, 10), Rat(1), Rat(3, 2), Rat(3)}) {
            Bias b{beta, obj, 1};
            for (Restriction r : {Restriction::None, default_restriction(obj)}) {
                Evaluation ev = exact_biased_optimum(inst, b, r);
                auto ref = oracles::best_biased(inst, b, r);
                CHECK(ev.solution == oracles::to_vec(ref.solution));
                CHECK(ev.biased_value == ref.value);
                CHECK(ev.pivot == ref.pivot);
                // The optimum bounds every candidate in the family.
                for (const auto& cand : oracles::candidates(inst, r)) {
                    const Rat value = oracles::biased_cost(inst, cand, b);
                    if (obj == Objective::Min) {
                        CHECK(ev.biased_value <= value);
                    } else {
                        CHECK(ev.biased_value >= value);
                    }
                }
            }
        }
    }
}

TEST_CASE("exact biased optimum respects residuals and the within filter") {
    Instance inst = residual(generators::isc(3, 2), 0);
    Bias b{Rat(1, 4), Objective::Min, 1};
    Evaluation ev = exact_biased_optimum(inst, b, Restriction::MinimalOnly);
    auto ref = oracles::best_biased(inst, b, Restriction::MinimalOnly);
    CHECK(ev.solution == oracles::to_vec(ref.solution));

    // Restrict candidates to subsets of a previous plan.
    ElementSet within{1, 2};
    Evaluation nested = exact_biased_optimum(inst, b, Restriction::MinimalOnly, within);
    auto nested_ref = oracles::best_biased(inst, b, Restriction::MinimalOnly, &within);
    CHECK(nested.solution == oracles::to_vec(nested_ref.solution));
    for (ElementId e : nested.solution) {
        CHECK(std::find(within.begin(), within.end(), e) != within.end());
    }
}

TEST_CASE("exact_opt frozen examples") {
    SUBCASE("layered cover with c < n") {
        OptResult opt = exact_opt(generators::isc(4, 3), Objective::Min);
        CHECK(opt.value == 3);
        CHECK(opt.witness == ElementSet{4});  // {y1}
    }
    SUBCASE("clique fan") {
        OptResult opt = exact_opt(generators::gk(4, 2), Objective::Max);
        CHECK(opt.value == 16);
        CHECK(opt.witness == ElementSet{8});  // {x4}
    }
    SUBCASE("single-set cover") {
        Instance inst;
        inst.kind = ProblemKind::SetCover;
        inst.universe = 2;
        inst.weights = {7};
        inst.sets = {{0, 1}};
        OptResult opt = exact_opt(inst, Objective::Min);
        CHECK(opt.value == 7);
        CHECK(opt.witness == ElementSet{0});
    }
}

TEST_CASE("exact_opt matches the subset-scan oracle") {
    for (const Instance& inst : small_pool()) {
        const Objective obj = inst.natural_objective();
        OptResult opt = exact_opt(inst, obj);
        auto [ref_value, ref_witness] = oracles::opt_ref(inst, obj);
        CHECK(opt.value == ref_value);
        CHECK(opt.witness == oracles::to_vec(ref_witness));
    }
}

TEST_CASE("lemma on biased solutions, checked on evaluations") {
    // For Min and beta < 1: the pivot weight of any alpha-window evaluation
    // is at most alpha * opt, and its plain cost at most (alpha/beta) * opt.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = (trial % 2 == 0)
                            ? generators::random_d_cover(100 + trial, 5, 4, 3, 6)
                            : generators::random_d_hitting(100 + trial, 6, 5, 2, 6);
        const Int opt = exact_opt(inst, Objective::Min).value;
        for (const Rat& beta : {Rat(1, 4), Rat(2, 3)}) {
            for (const Rat& alpha : {Rat(1), Rat(3, 2), Rat(2)}) {
                Bias b{beta, Objective::Min, alpha};
                Evaluation ev = adversarial_alpha(inst, b, Restriction::MinimalOnly, rng());
                CHECK(Rat(inst.weights[ev.pivot]) <= alpha * Rat(opt));
                CHECK(Rat(plain_cost(inst, ev.solution)) <= (alpha / beta) * Rat(opt));
            }
        }
    }
}

TEST_CASE("adversarial window membership and factor-1 identity") {
    for (const Instance& inst : small_pool()) {
        const Objective obj = inst.natural_objective();
        for (const Rat& beta : {Rat(1, 2), Rat(2)}) {
            Bias exact_bias{beta, obj, 1};
            Evaluation exact = exact_biased_optimum(inst, exact_bias, default_restriction(obj));
            SUBCASE("alpha = 1 is bit-for-bit the exact optimizer") {}
            Evaluation same = adversarial_alpha(inst, exact_bias, default_restriction(obj), 99);
            CHECK(same.solution == exact.solution);
            CHECK(same.biased_value == exact.biased_value);
            CHECK(same.pivot == exact.pivot);

            for (const Rat& alpha : {Rat(3, 2), Rat(3)}) {
                Bias b{beta, obj, alpha};
                Evaluation ev = adversarial_alpha(inst, b, default_restriction(obj), 7);
                if (obj == Objective::Min) {
                    CHECK(ev.biased_value <= alpha * exact.biased_value);
                    // Adversarial choice never improves on the exact plain cost.
                    CHECK(plain_cost(inst, ev.solution) >= plain_cost(inst, exact.solution));
                } else {
                    CHECK(ev.biased_value >= exact.biased_value / alpha);
                    CHECK(plain_cost(inst, ev.solution) <= plain_cost(inst, exact.solution));
                }
                // Determinism per seed.
                Evaluation again = adversarial_alpha(inst, b, default_restriction(obj), 7);
                CHECK(ev.solution == again.solution);
                CHECK(ev.pivot == again.pivot);
            }
        }
    }
}

TEST_CASE("adversarial window can select the expensive plan") {
    // With alpha = 3 the window of the layered cover includes {y1}.
    Instance inst = generators::isc(2, 3);
    Bias b{Rat(1, 4), Objective::Min, Rat(3)};
    Evaluation ev = adversarial_alpha(inst, b, Restriction::MinimalOnly, 0);
    // Window: c_beta <= 3 * 5/4 = 15/4; the worst plain candidate is {y1}
    // (plain 3... {x1,y2} has plain 4). Plain costs: {x1,x2}: 2, {x1,y2}: 4,
    // {y1}: 3 -> worst plain in window is {x1,y2}.
    CHECK(ev.biased_value <= Rat(15, 4));
    CHECK(plain_cost(inst, ev.solution) == 4);
    CHECK(ev.solution == ElementSet{0, 3});
}

TEST_CASE("no feasible candidate raises") {
    Instance inst;
    inst.kind = ProblemKind::Knapsack;
    inst.weights = {5};
    inst.loads = {10};
    inst.capacity = 3;
    Bias b{Rat(2), Objective::Max, 1};
    CHECK_THROWS_AS(exact_biased_optimum(inst, b, Restriction::MaximalOnly), InfeasibleError);
}

TEST_CASE("enumeration size limit is explicit") {
    Instance inst = generators::isc(13, 2);  // 26 ground elements
    Bias b{Rat(1, 2), Objective::Min, 1};
    CHECK_THROWS_AS(exact_biased_optimum(inst, b, Restriction::MinimalOnly), SizeLimitError);
    CHECK_THROWS_AS(exact_opt(inst, Objective::Min), SizeLimitError);
}
