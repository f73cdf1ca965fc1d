#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/limits.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/permutation.hpp"

namespace dpc {

// Full m-fold cover of a multigraph, stored as one permutation per edge
// instance in the graph's edge order. For edge (u,v) with u < v the
// permutation maps the fiber over u to the fiber over v: fiber vertex
// (u,z) is matched to (v, sigma(z)), so a transversal x is blocked on that
// edge exactly when x_v = sigma(x_u).
struct FullCover {
  int m = 0;
  std::vector<Permutation> perms;
  bool operator==(const FullCover&) const = default;
};

// Per-vertex fiber relabelings.
struct Gauge {
  int m = 0;
  std::vector<Permutation> pi;
};

// Every edge carries the identity; its colorings are exactly the proper
// m-colorings of the graph.
FullCover identity_cover(const Multigraph& g, int m);

// Relabel fibers: edge (u,v) with u < v maps sigma to pi_v o sigma o
// pi_u^{-1}. Coloring counts are preserved. Throws std::invalid_argument
// on modulus or size mismatch.
FullCover twist(const Multigraph& g, const FullCover& c, const Gauge& gauge);

// Edge indices of the spanning forest used for gauge fixing: scanning
// edges in order, an edge joins the forest when its endpoints are in
// different components so far. Ascending.
std::vector<int> spanning_forest_edges(const Multigraph& g);

// Twist c so the spanning forest edges all carry the identity; returns the
// fixed cover and the gauge that achieves it. Counts are unchanged.
std::pair<FullCover, Gauge> gauge_fix(const Multigraph& g, const FullCover& c);

// The indexed family of covers whose spanning-forest edges are identity.
// Every full m-fold cover of g is a twist of exactly one member. Member
// #i is decoded from i written in base m! across the free (non-forest)
// edges, first free edge most significant, digit = permutation lex rank;
// so stream order is lexicographic in the free edges' rank vector.
class GaugeFixedFamily {
 public:
  GaugeFixedFamily(Multigraph g, int m);

  // (m!)^(free edge count). size_overflows() reports when that exceeds
  // uint64 range; size() is meaningless then.
  std::uint64_t size() const { return size_; }
  bool size_overflows() const { return overflow_; }

  FullCover at(std::uint64_t index) const;

  // Inverse of at(): the stream index of a gauge-fixed cover. Throws
  // std::invalid_argument when the cover is not in the stream (wrong shape
  // or a non-identity forest edge).
  std::uint64_t index_of(const FullCover& cover) const;

  const Multigraph& graph() const { return g_; }
  int fold() const { return m_; }
  const std::vector<int>& forest_edges() const { return forest_; }
  const std::vector<int>& free_edges() const { return free_; }

 private:
  Multigraph g_;
  int m_;
  std::vector<int> forest_;
  std::vector<int> free_;
  std::uint64_t size_ = 1;
  bool overflow_ = false;
};

struct CountResult {
  std::uint64_t count = 0;
  bool capped = false;      // counting stopped once count reached the cap
  std::uint64_t nodes = 0;  // backtracking assignments tried
};

// Number of transversals (one fiber index per vertex) blocked by no edge.
// Backtracking over vertices in decreasing-degree order; the count is
// order-independent. A nonzero cap stops the search once that many
// colorings are found (only a minimum is usually wanted); node budget
// lim.max_nodes_per_cover, exceeded -> GuardExceeded.
CountResult count_colorings_capped(const Multigraph& g, const FullCover& c,
                                   std::uint64_t cap, const Limits& lim = {});
std::uint64_t count_colorings(const Multigraph& g, const FullCover& c,
                              const Limits& lim = {});

// A list assignment embedded in cover form. lists[v] is the vertex's color
// list sorted ascending, so fiber index z at v means color lists[v][z].
// matched[e] holds the fiber index pairs whose colors coincide across edge
// e; those pairs are the only constraints the list assignment imposes, and
// transversals avoiding them biject with proper list colorings. cover
// completes each partial matching deterministically (unmatched indices
// paired in ascending order), which can only forbid more transversals, so
// count_colorings(g, cover) <= the list coloring count, with equality when
// all lists agree.
struct ListCover {
  FullCover cover;
  std::vector<std::vector<int>> lists;
  std::vector<std::vector<std::pair<int, int>>> matched;
};

// Requires a simple graph and equal-size lists; duplicate colors within a
// list are invalid. Throws std::invalid_argument.
ListCover list_to_cover(const Multigraph& g, const std::vector<std::vector<int>>& lists);

// Proper list colorings counted directly (adjacent vertices get different
// colors, each from its own list).
std::uint64_t count_list_colorings(const Multigraph& g,
                                   const std::vector<std::vector<int>>& lists,
                                   const Limits& lim = {});

// Transversals avoiding only the matched pairs of lc; equals
// count_list_colorings for the lists lc was built from.
std::uint64_t count_matched_colorings(const Multigraph& g, const ListCover& lc,
                                      const Limits& lim = {});

// One independent permutation per edge from a splitmix-seeded generator;
// identical seeds give identical covers.
FullCover random_cover(const Multigraph& g, int m, std::uint64_t seed);

// Cover file format: line 1 "m=<int>", then "<edge_index>: i0 i1 ... i_{m-1}"
// per edge in graph edge order. Round-trips exactly.
std::string serialize_cover(const FullCover& c);
FullCover parse_cover(const std::string& text);

// Gauge files look the same with vertex indices in place of edge indices.
std::string serialize_gauge(const Gauge& g);
Gauge parse_gauge(const std::string& text);

}  // namespace dpc
