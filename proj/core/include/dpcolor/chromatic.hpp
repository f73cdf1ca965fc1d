#pragma once

#include <cstdint>

#include "dpcolor/limits.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpc {

// Evaluate the chromatic polynomial at a nonnegative integer m by
// deletion/contraction with memoization. Parallel edges collapse to one
// edge first; loops make the value identically zero. Throws GuardExceeded
// when the recursion exceeds lim.max_states calls.
std::int64_t chromatic_poly_eval(const Multigraph& g, int m, const Limits& lim = {});

// Smallest m with a proper m-coloring, found by trying m = 0, 1, 2, ...
// Exponential in the worst case; guarded by lim.max_states states.
int chromatic_number(const Multigraph& g, const Limits& lim = {});

// Whether g has exactly one proper k-coloring up to renaming colors,
// i.e. exactly one partition of the vertices into k independent sets
// that pairwise see each other. Counts partitions by enumeration.
bool is_uniquely_k_colorable(const Multigraph& g, int k, const Limits& lim = {});

// Edge count forced on a uniquely k-colorable graph with n vertices:
// at least (k-1)n - k(k-1)/2 edges.
std::int64_t uniquely_colorable_edge_bound(std::int64_t n, std::int64_t k);

}  // namespace dpc
