#pragma once

// Internal bitmask view of an instance's feasibility predicate. Ground sets
// are capped at 64 elements (Instance::validate enforces this), so subsets
// fit in one word. Not part of the public API.

#include <cstdint>
#include <vector>

#include "biaslab/instance.hpp"

namespace biaslab::detail {

using Mask = std::uint64_t;

inline Mask bit_of(int id) { return Mask{1} << id; }

inline Mask mask_of(const ElementSet& s) {
    Mask m = 0;
    for (ElementId e : s) m |= bit_of(e);
    return m;
}

inline ElementSet set_of(Mask m) {
    ElementSet s;
    while (m) {
        int b = std::countr_zero(m);
        s.push_back(b);
        m &= m - 1;
    }
    return s;
}

/// True when, among equal-size sets, `a` is lexicographically smaller than
/// `b` as a sorted id sequence.
inline bool lex_less(Mask a, Mask b) {
    Mask diff = a ^ b;
    if (diff == 0) return false;
    Mask low = diff & (~diff + 1);
    return (a & low) != 0;
}

class MaskOracle {
public:
    explicit MaskOracle(const Instance& inst);

    const Instance& instance() const { return *inst_; }
    int ground_size() const { return n_; }
    Mask committed_mask() const { return committed_; }
    Mask remaining_mask() const { return remaining_; }
    bool monotone_up() const { return monotone_up_; }
    bool monotone_down() const { return monotone_down_; }
    bool raw_family() const { return raw_; }

    /// Feasibility of `smask` (a subset of the remaining ground) for the
    /// residual instance, i.e. of smask together with the committed prefix.
    bool feasible(Mask smask) const;

    /// Residual candidates of a raw explicit family: {S \ committed},
    /// deduplicated, possibly containing the empty mask.
    const std::vector<Mask>& raw_candidates() const { return raw_candidates_; }

private:
    const Instance* inst_;
    int n_ = 0;
    Mask committed_ = 0;
    Mask remaining_ = 0;
    bool monotone_up_ = false;
    bool monotone_down_ = false;
    bool raw_ = false;

    // set_cover
    Mask universe_full_ = 0;
    Mask covered_by_committed_ = 0;
    std::vector<Mask> covers_;

    // hitting_set: family sets not already hit by the committed prefix
    std::vector<Mask> unhit_sets_;

    // independent_set
    std::vector<Mask> adjacency_;
    bool committed_independent_ = true;

    // knapsack
    Int committed_load_{0};

    // explicit
    std::vector<Mask> family_masks_;
    std::vector<Mask> raw_candidates_;
};

}  // namespace biaslab::detail
