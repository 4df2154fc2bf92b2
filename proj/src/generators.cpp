#include "biaslab/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace biaslab::generators {

namespace {

Int int_pow(Int base, int exp) {
    Int r{1};
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Deterministic uniform draw in [0, bound); avoids the
// implementation-defined std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Instance superfluous_cover(int n, const Int& c) {
    if (n < 1) throw InvalidInstanceError("superfluous_cover needs n >= 1");
    if (c < 2) throw InvalidInstanceError("superfluous_cover needs c >= 2");
    Instance inst;
    inst.kind = ProblemKind::SetCover;
    inst.universe = n;
    for (int i = 0; i < n; ++i) {
        inst.sets.push_back({i});
        inst.weights.emplace_back(1);
        inst.labels.push_back("x" + std::to_string(i + 1));
    }
    ElementSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    inst.sets.push_back(all);
    inst.weights.push_back(c);
    inst.labels.push_back("y");
    inst.validate();
    return inst;
}

Instance isc(int n, const Int& c) {
    if (n < 1) throw InvalidInstanceError("isc needs n >= 1");
    if (c < 2) throw InvalidInstanceError("isc needs c >= 2");
    Instance inst;
    inst.kind = ProblemKind::SetCover;
    inst.universe = n;
    for (int i = 0; i < n; ++i) {
        inst.sets.push_back({i});
        inst.weights.emplace_back(1);
        inst.labels.push_back("x" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
        ElementSet suffix;
        for (int j = i; j < n; ++j) suffix.push_back(j);
        inst.sets.push_back(suffix);
        inst.weights.push_back(c);
        inst.labels.push_back("y" + std::to_string(i + 1));
    }
    inst.validate();
    return inst;
}

Instance jn(int n, const std::vector<Int>& wx, const std::vector<Int>& wy) {
    if (n < 1) throw InvalidInstanceError("jn needs n >= 1");
    if (static_cast<int>(wx.size()) != n || static_cast<int>(wy.size()) != n) {
        throw InvalidInstanceError("jn needs n x-weights and n y-weights");
    }
    Instance inst;
    inst.kind = ProblemKind::Explicit;
    inst.closure = FamilyClosure::Raw;
    for (int i = 0; i < n; ++i) {
        inst.weights.push_back(wx[i]);
        inst.labels.push_back("x" + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
        inst.weights.push_back(wy[i]);
        inst.labels.push_back("y" + std::to_string(i + 1));
    }
    // {x_1..x_{i-1}, y_i} for i = 1..n, then {x_1..x_n}.
    for (int i = 0; i < n; ++i) {
        ElementSet s;
        for (int j = 0; j < i; ++j) s.push_back(j);
        s.push_back(n + i);
        inst.family.push_back(s);
    }
    ElementSet all_x(n);
    for (int i = 0; i < n; ++i) all_x[i] = i;
    inst.family.push_back(all_x);
    inst.validate();
    return inst;
}

Instance gk(int k, int beta_int) {
    if (k < 1) throw InvalidInstanceError("gk needs k >= 1");
    if (beta_int < 2) throw InvalidInstanceError("gk needs an integer beta >= 2");
    Instance inst;
    inst.kind = ProblemKind::IndependentSet;
    // y_1..y_k first (ids 0..k-1), then x_0..x_k (ids k..2k).
    for (int i = 1; i <= k; ++i) {
        inst.weights.emplace_back(1);
        inst.labels.push_back("y" + std::to_string(i));
    }
    for (int i = 0; i <= k; ++i) {
        inst.weights.push_back(int_pow(beta_int, i));
        inst.labels.push_back("x" + std::to_string(i));
    }
    auto x_id = [&](int i) { return k + i; };
    auto y_id = [&](int i) { return i - 1; };
    for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) inst.edges.emplace_back(x_id(i), x_id(j));
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = i; j <= k; ++j) inst.edges.emplace_back(y_id(i), x_id(j));
    }
    inst.validate();
    return inst;
}

Instance knapsack_family(int k, int beta_int) {
    if (k < 1) throw InvalidInstanceError("knapsack_family needs k >= 1");
    if (beta_int < 2) throw InvalidInstanceError("knapsack_family needs an integer beta >= 2");
    const int n = 2 * k + 1;
    Instance inst;
    inst.kind = ProblemKind::Knapsack;
    inst.capacity = n;
    for (int i = 1; i <= k + 1; ++i) {
        inst.weights.push_back(int_pow(beta_int, k + 1 - i));
        inst.loads.push_back(Int{n} - (i - 1));
        inst.labels.push_back("item" + std::to_string(i));
    }
    for (int i = k + 2; i <= n; ++i) {
        inst.weights.emplace_back(1);
        inst.loads.emplace_back(1);
        inst.labels.push_back("item" + std::to_string(i));
    }
    inst.validate();
    return inst;
}

Instance random_d_cover(std::uint64_t seed, int n, int m, int d, int wmax) {
    if (n < 1 || m < 0 || d < 1 || wmax < 1) {
        throw InvalidInstanceError("random_d_cover parameter out of range");
    }
    if (n > 64) throw InvalidInstanceError("universe limited to 64 points");
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.kind = ProblemKind::SetCover;
    inst.universe = n;
    std::vector<bool> covered(n, false);
    for (int s = 0; s < m; ++s) {
        const int size = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(d)));
        std::set<int> members;
        while (static_cast<int>(members.size()) < std::min(size, n)) {
            members.insert(static_cast<int>(draw(rng, static_cast<std::uint64_t>(n))));
        }
        ElementSet set(members.begin(), members.end());
        for (int p : set) covered[p] = true;
        inst.sets.push_back(std::move(set));
        inst.weights.emplace_back(1 + static_cast<long long>(draw(rng, wmax)));
        inst.labels.push_back("s" + std::to_string(s));
    }
    // Patch uncovered points with singletons so the ground set stays feasible.
    for (int p = 0; p < n; ++p) {
        if (covered[p]) continue;
        inst.sets.push_back({p});
        inst.weights.emplace_back(wmax);
        inst.labels.push_back("patch" + std::to_string(p));
    }
    inst.validate();
    return inst;
}

Instance random_d_hitting(std::uint64_t seed, int n, int m, int d, int wmax) {
    if (n < 1 || m < 1 || d < 1 || d > n || wmax < 1) {
        throw InvalidInstanceError("random_d_hitting parameter out of range");
    }
    if (n > 64) throw InvalidInstanceError("ground limited to 64 points");
    // Distinct d-subsets must exist in the requested number.
    std::uint64_t combos = 1;
    for (int i = 0; i < d; ++i) combos = combos * (n - i) / (i + 1);
    if (static_cast<std::uint64_t>(m) > combos) {
        throw InvalidInstanceError("more sets requested than distinct d-subsets exist");
    }
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.kind = ProblemKind::HittingSet;
    inst.universe = n;
    for (int p = 0; p < n; ++p) {
        inst.weights.emplace_back(1 + static_cast<long long>(draw(rng, wmax)));
        inst.labels.push_back("v" + std::to_string(p));
    }
    std::set<ElementSet> seen;
    while (static_cast<int>(seen.size()) < m) {
        std::set<int> members;
        while (static_cast<int>(members.size()) < d) {
            members.insert(static_cast<int>(draw(rng, static_cast<std::uint64_t>(n))));
        }
        ElementSet set(members.begin(), members.end());
        if (seen.insert(set).second) inst.sets.push_back(std::move(set));
    }
    inst.validate();
    return inst;
}

}  // namespace biaslab::generators
