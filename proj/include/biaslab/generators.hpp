#pragma once

#include "biaslab/instance.hpp"

namespace biaslab::generators {

/// Set cover with n unit-weight singletons x_i = {i} and one set y covering
/// everything at weight c. Every mixed solution makes the y superfluous, so
/// an unrestricted biased agent procrastinates through the singletons
/// whenever 1 + beta*c < c.
Instance superfluous_cover(int n, const Int& c);

/// Layered set cover over {1..n}: singletons x_i = {i} of weight 1 and
/// suffix sets y_i = {i..n} of weight c. Its minimal feasible solutions are
/// {y_1}, {x_1..x_i, y_{i+1}} and {x_1..x_n}; even the minimal-only agent
/// walks the whole singleton chain when 1 + beta*c < c.
Instance isc(int n, const Int& c);

/// Explicit raw family over x_1..x_n, y_1..y_n with the n+1 feasible sets
/// {y_1}, {x_1,y_2}, ..., {x_1..x_{n-1},y_n}, {x_1..x_n} and the given
/// weights. This is the minor structure every high-ratio minimization run
/// contains. Element ids: x_i at i-1, y_i at n+i-1.
Instance jn(int n, const std::vector<Int>& wx, const std::vector<Int>& wy);

/// Independent-set tightness family: a (k+1)-clique x_0..x_k with weights
/// beta^i plus unit-weight vertices y_1..y_k, y_i adjacent to x_i..x_k.
/// The overestimating agent peels off y_k..y_1 and finishes with x_0 for a
/// total of k+1 against the optimum beta^k. Element ids: y_i at i-1, x_i at
/// k+i (the y-first order matches the pivot ties of the intended run).
Instance gk(int k, int beta_int);

/// Knapsack analogue of gk: n = 2k+1 items with capacity W = n, values
/// beta^{k+1-i} and loads W-(i-1) for i <= k+1, and k unit value/load items.
/// Optimum beta^k, agent total k+1.
Instance knapsack_family(int k, int beta_int);

/// Seeded random set cover: m sets of size <= d over a universe of size n,
/// weights uniform in [1, wmax]. Elements the sample leaves uncovered are
/// patched with singleton sets of weight wmax so the instance stays
/// completable.
Instance random_d_cover(std::uint64_t seed, int n, int m, int d, int wmax);

/// Seeded random hitting set: m distinct sets of size exactly d over n
/// points with weights uniform in [1, wmax].
Instance random_d_hitting(std::uint64_t seed, int n, int m, int d, int wmax);

}  // namespace biaslab::generators
