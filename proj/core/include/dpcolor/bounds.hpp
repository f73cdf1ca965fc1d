#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpcolor/limits.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpc {

// Grid minimization instance: a polynomial of formal degree d over a
// product of value sets of the given sizes.
struct AFInstance {
  std::vector<int> sizes;  // each >= 1
  int d = 0;               // >= 0
};

// Exact minimum of prod q_i over integer q with 1 <= q_i <= sizes[i] and
// sum q_i >= sum sizes - d. When the sum constraint is met by all-ones the
// minimum is 1. Dynamic program over prefixes; exact integer products.
// Throws std::invalid_argument on empty sizes, std::overflow_error past
// uint64 range.
std::uint64_t alon_furedi_min(const AFInstance& inst);

// t^((S - n - d) / (t - 1)); requires S >= n + d and t >= 2, else
// HypothesisError. Always at most the exact minimum above on matching
// aggregates.
double corollary9_bound(std::int64_t S, std::int64_t n, std::int64_t d, std::int64_t t);

// 3^(n - l/2); requires 2n >= l, else HypothesisError.
double theorem5_bound(std::int64_t n, std::int64_t l);

// Exact integer ceiling of 3^(n - l/2), no floating point. Even l is a
// pure power; odd l uses the integer square root of 3^(2n - l), which is
// never a perfect square at an odd exponent, so the ceiling is isqrt + 1.
// Requires 2n >= l; throws std::overflow_error past uint64 range.
std::uint64_t theorem5_ceiling(std::int64_t n, std::int64_t l);

// degeneracy + 1, the coloring number upper bound.
int chi_dp_upper_from_degeneracy(const Multigraph& g);

// True when every gauge-fixed full m-fold cover admits a coloring, which
// by twist invariance covers every full m-fold cover. Enumeration is
// guarded by lim.max_covers.
bool verify_chi_dp_le(const Multigraph& g, int m, const Limits& lim = {});

// Hypothesis and conclusion report for the equality criterion on uniquely
// 3-colorable graphs with 2n - 3 edges.
struct Lemma8Report {
  std::int64_t n = 0;
  std::int64_t l = 0;
  bool uniquely_3_colorable = false;
  bool chi_at_least_3 = false;       // no proper 2-coloring
  bool chi_dp_at_most_3 = false;
  std::string chi_dp_evidence;       // "degeneracy", "exhaustive" or "unverified"
  bool edge_count_matches = false;   // l == 2n - 3
  bool applies = false;              // all hypotheses hold
  std::int64_t chromatic_at_3 = 0;   // P(G,3); equals 6 when applies
};

// Check the hypotheses and report the forced value 6 when they all hold.
Lemma8Report lemma8_check(const Multigraph& g, const Limits& lim = {});

}  // namespace dpc
