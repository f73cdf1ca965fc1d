#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dpcolor/bounds.hpp"
#include "dpcolor/families.hpp"
#include "oracles.hpp"

using namespace dpc;

TEST_CASE("[af] exact minimum matches brute force on small instances") {
  for (int vars = 1; vars <= 3; ++vars) {
    std::vector<int> sizes(static_cast<std::size_t>(vars), 1);
    while (true) {
      int total = 0;
      for (int a : sizes) total += a;
      for (int d = 0; d <= total; ++d) {
        CHECK(alon_furedi_min({sizes, d}) == oracle::grid_min(sizes, d));
      }
      int i = vars - 1;
      while (i >= 0 && sizes[static_cast<std::size_t>(i)] == 4) {
        sizes[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++sizes[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("[af] random larger instances against brute force") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int vars = 1 + static_cast<int>(rng.next() % 5);
    std::vector<int> sizes;
    int total = 0;
    for (int i = 0; i < vars; ++i) {
      sizes.push_back(1 + static_cast<int>(rng.next() % 4));
      total += sizes.back();
    }
    int d = static_cast<int>(rng.next() % static_cast<std::uint64_t>(total + 2));
    CHECK(alon_furedi_min({sizes, d}) == oracle::grid_min(sizes, d));
  }
}

TEST_CASE("[af] degenerate corners") {
  CHECK(alon_furedi_min({{1}, 0}) == 1);
  CHECK(alon_furedi_min({{5}, 0}) == 5);
  CHECK(alon_furedi_min({{5}, 3}) == 2);
  CHECK(alon_furedi_min({{5}, 10}) == 1);
  CHECK(alon_furedi_min({{3, 3, 3}, 0}) == 27);   // no slack: q = sizes
  CHECK(alon_furedi_min({{3, 3, 3}, 2}) == 9);
  CHECK(alon_furedi_min({{3, 3, 3}, 9}) == 1);
  CHECK_THROWS_AS(alon_furedi_min({{0, 2}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(alon_furedi_min({{}, 0}), std::invalid_argument);
}

TEST_CASE("[bounds] grid floor never exceeds the exact grid minimum") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    int vars = 1 + static_cast<int>(rng.next() % 5);
    std::vector<int> sizes;
    int total = 0;
    int t = 2;
    for (int i = 0; i < vars; ++i) {
      sizes.push_back(2 + static_cast<int>(rng.next() % 3));
      total += sizes.back();
      t = std::max(t, sizes.back());
    }
    int slack = total - vars;
    int d = static_cast<int>(rng.next() % static_cast<std::uint64_t>(slack + 1));
    double lower = corollary9_bound(total, vars, d, t);
    std::uint64_t exact = alon_furedi_min({sizes, d});
    CHECK(lower <= static_cast<double>(exact) * (1 + 1e-12));
  }
}

TEST_CASE("[bounds] closed form of the grid floor") {
  CHECK(corollary9_bound(18, 6, 9, 3) == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-12));
  CHECK(corollary9_bound(6, 3, 0, 2) == doctest::Approx(8.0));
  CHECK(corollary9_bound(6, 3, 3, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(corollary9_bound(6, 3, 0, 1), HypothesisError);
  CHECK_THROWS_AS(corollary9_bound(2, 3, 0, 2), HypothesisError);
}

TEST_CASE("[bounds] coloring floor values") {
  CHECK(theorem5_ceiling(6, 9) == 6);
  CHECK(theorem5_ceiling(5, 8) == 3);
  CHECK(theorem5_ceiling(3, 0) == 27);
  CHECK(theorem5_ceiling(8, 13) == 6);
  CHECK(theorem5_ceiling(10, 13) == 47);
  CHECK(theorem5_ceiling(2, 2) == 3);
  CHECK(theorem5_ceiling(5, 10) == 1);
  CHECK(theorem5_bound(6, 9) == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-12));
  CHECK(theorem5_bound(3, 0) == doctest::Approx(27.0));
  CHECK_THROWS_AS(theorem5_bound(3, 7), HypothesisError);
  CHECK_THROWS_AS(theorem5_ceiling(3, 7), HypothesisError);
}

TEST_CASE("[bounds] floor ceiling agrees with careful float rounding in range") {
  for (int n = 1; n <= 12; ++n) {
    for (int l = 0; l <= 2 * n; ++l) {
      double b = theorem5_bound(n, l);
      std::uint64_t c = theorem5_ceiling(n, l);
      CHECK(static_cast<double>(c) >= b - 1e-6);
      CHECK(static_cast<double>(c - 1) < b);
    }
  }
}

TEST_CASE("[bounds] degeneracy gives the fold guarantee") {
  CHECK(chi_dp_upper_from_degeneracy(hk(3)) == 3);
  CHECK(chi_dp_upper_from_degeneracy(cycle(6)) == 3);
  CHECK(chi_dp_upper_from_degeneracy(edgeless(4)) == 1);
  CHECK(chi_dp_upper_from_degeneracy(complete(4)) == 4);
}

TEST_CASE("[bounds] exhaustive cover check at small folds") {
  Limits lim;
  CHECK(verify_chi_dp_le(cycle(5), 3, lim));
  CHECK_FALSE(verify_chi_dp_le(cycle(5), 2, lim));  // odd cycle needs 3
  CHECK(verify_chi_dp_le(cycle(4), 3, lim));
  CHECK_FALSE(verify_chi_dp_le(cycle(4), 2, lim));  // a twisted 2-fold cycle cover blocks
  CHECK(verify_chi_dp_le(digon(), 3, lim));
  CHECK_FALSE(verify_chi_dp_le(digon(), 2, lim));
  CHECK(verify_chi_dp_le(edgeless(3), 1, lim));
}

TEST_CASE("[bounds] equality criterion report on the named families") {
  Limits lim;
  for (int k = 1; k <= 2; ++k) {
    Lemma8Report r = lemma8_check(hk(k), lim);
    CHECK(r.uniquely_3_colorable);
    CHECK(r.chi_at_least_3);
    CHECK(r.chi_dp_at_most_3);
    CHECK(r.edge_count_matches);
    CHECK(r.applies);
    CHECK(r.chromatic_at_3 == 6);
  }
  Lemma8Report k3 = lemma8_check(complete(3), lim);
  CHECK(k3.applies);
  CHECK(k3.chromatic_at_3 == 6);

  Lemma8Report c4 = lemma8_check(cycle(4), lim);
  CHECK_FALSE(c4.uniquely_3_colorable);
  CHECK_FALSE(c4.applies);

  Lemma8Report k4 = lemma8_check(complete(4), lim);
  CHECK_FALSE(k4.uniquely_3_colorable);  // no 3-coloring at all
  CHECK_FALSE(k4.applies);

  Lemma8Report p4 = lemma8_check(path(4), lim);
  CHECK_FALSE(p4.chi_at_least_3);
  CHECK_FALSE(p4.applies);
}
