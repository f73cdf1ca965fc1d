#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/families.hpp"
#include "dpcolor/search.hpp"
#include "oracles.hpp"

using namespace dpc;

namespace {
SearchOptions opts(int threads = 1) {
  SearchOptions o;
  o.threads = threads;
  return o;
}
}  // namespace

TEST_CASE("[search] hand checked minima") {
  CHECK(pdp_exact(digon(), 3, opts()).value == 3);
  CHECK(pdp_exact(cycle(4), 3, opts()).value == 15);
  CHECK(pdp_exact(cycle(3), 3, opts()).value == 6);
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t want = 1;
    for (int i = 0; i < n; ++i) want *= 3;
    CHECK(pdp_exact(edgeless(n), 3, opts()).value == want);
  }
  CHECK(pdp_exact(path(4), 3, opts()).value == 24);  // forests have one cover class
}

TEST_CASE("[search] gauge fixed scan equals the full cover space minimum") {
  SplitMix64 rng(201);
  int checked = 0;
  for (const Multigraph& g : oracle::all_simple_graphs(4)) {
    if (g.edge_count() - g.vertex_count() + component_count(g) > 2) continue;
    if (g.edge_count() > 5) continue;  // keep the oracle under control here
    PdpResult r = pdp_exact(g, 3, opts());
    oracle::AllCoversMin all = oracle::min_over_all_covers(g, 3);
    CHECK(r.value == all.value);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("[search] result is attained by its witness") {
  Limits lim;
  SplitMix64 rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 4);
    Multigraph g = oracle::random_multigraph(n, 6, rng);
    if (GaugeFixedFamily(g, 3).size() > 2000) continue;
    PdpResult r = pdp_exact(g, 3, opts());
    CHECK(r.mode == PdpMode::exact);
    CHECK(count_colorings(g, r.witness, lim) == r.value);
    CHECK(GaugeFixedFamily(g, 3).at(r.witness_index) == r.witness);
    CHECK(r.graph_key == graph_key(g));
  }
}

TEST_CASE("[search] witness is the first minimizer in stream order") {
  Limits lim;
  Multigraph g = cycle(4);
  PdpResult r = pdp_exact(g, 3, opts());
  CHECK(r.witness_index == 3);
  GaugeFixedFamily fam(g, 3);
  for (std::uint64_t i = 0; i < r.witness_index; ++i) {
    CHECK(count_colorings(g, fam.at(i), lim) > r.value);
  }
}

TEST_CASE("[search] floor exit keeps the scan short when the start is optimal") {
  PdpResult r = pdp_exact(hk(1), 3, opts());
  CHECK(r.value == 6);
  CHECK(r.covers_examined == 1);  // the identity cover already meets the floor
  CHECK(r.witness_index == 0);
}

TEST_CASE("[search] thread counts do not change the answer") {
  for (const Multigraph& g : {cycle(4), wheel_even(1), hk(1), theta({2, 2, 3})}) {
    PdpResult one = pdp_exact(g, 3, opts(1));
    PdpResult four = pdp_exact(g, 3, opts(4));
    CHECK(one.value == four.value);
    CHECK(one.witness_index == four.witness_index);
    CHECK(one.witness == four.witness);
    CHECK(one.mode == four.mode);
  }
}

TEST_CASE("[search] cover budget degrades to an upper bound") {
  SearchOptions o = opts();
  o.limits.max_covers = 1;
  Multigraph g = wheel_even(1);  // 1296 gauge-fixed covers, far over budget
  PdpResult r = pdp_exact(g, 3, o);
  CHECK(r.mode == PdpMode::heuristic_upper_bound);
  CHECK(r.covers_examined == 1);
  CHECK(r.value == 6);  // only the identity cover was seen
  CHECK(r.witness_index == 0);
  Limits lim;
  CHECK(count_colorings(g, r.witness, lim) == r.value);
}

TEST_CASE("[search] heuristic bounds the exact value from above") {
  Limits lim;
  SplitMix64 rng(221);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 3);
    Multigraph g = oracle::random_multigraph(n, 7, rng);
    if (GaugeFixedFamily(g, 3).size() > 50000) continue;
    PdpResult exact = pdp_exact(g, 3, opts());
    PdpResult heur = pdp_heuristic(g, 3, 60, rng.next(), opts());
    CHECK(heur.mode == PdpMode::heuristic_upper_bound);
    CHECK(heur.value >= exact.value);
    CHECK(count_colorings(g, heur.witness, lim) == heur.value);
  }
}

TEST_CASE("[search] heuristic is seed deterministic") {
  Multigraph g = wheel_even(1);
  PdpResult a = pdp_heuristic(g, 3, 100, 9, opts());
  PdpResult b = pdp_heuristic(g, 3, 100, 9, opts());
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.covers_examined == b.covers_examined);
}

TEST_CASE("[search] fold floor verification on the bounded families") {
  for (const Multigraph& g : {digon(), cycle(3), cycle(4), cycle(5), cycle(6), hk(1)}) {
    Theorem5Report r = verify_theorem5(g, opts());
    CHECK(r.chi_dp_at_most_3);
    CHECK(r.pass);
    CHECK(r.exact.value >= r.bound_ceiling);
  }
  Theorem5Report wheel = verify_theorem5(wheel_even(1), opts());
  CHECK(wheel.pass);
  CHECK(wheel.tight);
  Theorem5Report h1 = verify_theorem5(hk(1), opts());
  CHECK(h1.tight);
  Theorem5Report e2 = verify_theorem5(edgeless(2), opts());
  CHECK(e2.pass);
  CHECK(e2.exact.value == 9);
  CHECK(e2.tight);
  CHECK_THROWS_AS(verify_theorem5(complete(6), opts()), HypothesisError);  // 15 edges > 2n
}

TEST_CASE("[search] minimum never beats the identity cover") {
  SplitMix64 rng(231);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 4);
    Multigraph g = oracle::random_multigraph(n, 6, rng);
    if (GaugeFixedFamily(g, 3).size() > 2000) continue;
    CompareReport r = compare_chromatic(g, 3, opts());
    CHECK(r.pdp.value <= static_cast<std::uint64_t>(r.chromatic));
    CHECK(r.strict == (r.pdp.value < static_cast<std::uint64_t>(r.chromatic)));
  }
  CompareReport c4 = compare_chromatic(cycle(4), 3, opts());
  CHECK(c4.pdp.value == 15);
  CHECK(c4.chromatic == 18);
  CHECK(c4.strict);
  CompareReport h = compare_chromatic(hk(1), 3, opts());
  CHECK_FALSE(h.strict);
}
