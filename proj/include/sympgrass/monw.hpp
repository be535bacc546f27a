#pragma once

// The canonical square-free monomial mon_w of w >= v: the unique set of
// PosA points {(r_i, c_i)} with distinct rows and columns, pairwise nested or
// disjoint as intervals [c, r], and w = (v \ {c_i}) ∪ {r_i}.

#include <span>
#include <vector>

#include "sympgrass/grid.hpp"
#include "sympgrass/poset.hpp"

namespace sympgrass {

/// Pairs each r in w\v with the nearest unmatched c in v\w below it, scanning
/// upwards. Throws InputError unless v <= w.
GridMonomial mon_w(const IndexSet& v, const IndexSet& w);

/// Condition B: r_i < r_j implies c_j < c_i or r_i < c_j.
bool satisfies_condition_b(std::span<const GridPoint> points);

/// Every bijection w\v -> v\w, kept when the pairs lie in PosA and satisfy
/// conditions A-C. Exponential; for checking mon_w at small d.
std::vector<std::vector<GridPoint>> matchings_satisfying_abc(const IndexSet& v, const IndexSet& w);

/// The exhaustive construction: the unique A-C matching, or InternalError.
GridMonomial mon_w_reference(const IndexSet& v, const IndexSet& w);

}  // namespace sympgrass
