#pragma once

#include <cstdint>
#include <string>

#include "dpcolor/bounds.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/limits.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpc {

enum class PdpMode { exact, heuristic_upper_bound };

const char* pdp_mode_name(PdpMode mode);

struct PdpResult {
  std::string graph_key;
  int m = 0;
  std::uint64_t value = 0;
  PdpMode mode = PdpMode::exact;
  FullCover witness;               // gauge fixed; reproduces value
  std::uint64_t witness_index = 0; // position in the gauge-fixed stream (exact mode)
  std::uint64_t covers_examined = 0;
  std::uint64_t elapsed_ms = 0;
};

struct SearchOptions {
  int threads = 1;
  Limits limits{};
};

// Minimum coloring count over all full m-fold covers, by scanning the
// gauge-fixed stream. The witness is the first stream cover attaining the
// minimum; with several threads the ranges are merged on (count, index),
// so value and witness match the single-thread run. Per-cover counting is
// capped at the running minimum. Early exit only on a proven floor: zero
// colorings, or the 3^(n - l/2) ceiling when m = 3, 2n >= l and the graph
// is at most 2-degenerate. When the stream exceeds limits.max_covers only
// the leading max_covers covers are scanned and the result degrades to a
// heuristic upper bound.
PdpResult pdp_exact(const Multigraph& g, int m, const SearchOptions& opt = {});

// First-improvement local search over single free-edge replacements inside
// the gauge-fixed space, restarting from random covers at local optima.
// iterations counts candidate evaluations; 0 returns the seed cover's
// count unexplored. Deterministic for a fixed seed.
PdpResult pdp_heuristic(const Multigraph& g, int m, std::uint64_t iterations,
                        std::uint64_t seed, const SearchOptions& opt = {});

struct Theorem5Report {
  std::int64_t n = 0;
  std::int64_t l = 0;
  bool hyp_size = false;           // 2n >= l
  bool hyp_size_equality = false;  // 2n == l, boundary case flagged
  bool chi_dp_at_most_3 = false;
  std::string chi_dp_evidence;     // "degeneracy", "exhaustive" or "unverified"
  double bound = 0.0;              // 3^(n - l/2)
  std::uint64_t bound_ceiling = 0;
  PdpResult exact;
  bool pass = false;   // exact value >= ceiling
  bool tight = false;  // exact value == ceiling
};

// Verify the 3^(n - l/2) floor against the exact minimum. Throws
// HypothesisError when 2n < l; reports evidence when the 3-fold cover
// hypothesis cannot be established under the guards.
Theorem5Report verify_theorem5(const Multigraph& g, const SearchOptions& opt = {});

struct CompareReport {
  int m = 0;
  PdpResult pdp;
  std::int64_t chromatic = 0;
  bool strict = false;  // pdp.value < chromatic
};

// P_DP versus the proper coloring count at the same m. The identity cover
// is in the search space, so pdp.value <= chromatic always.
CompareReport compare_chromatic(const Multigraph& g, int m, const SearchOptions& opt = {});

}  // namespace dpc
