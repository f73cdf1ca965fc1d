#include "dpcolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"

namespace dpc {

namespace {

constexpr unsigned __int128 kU64Max = static_cast<unsigned __int128>(UINT64_MAX);

unsigned __int128 pow3_u128(int e) {
  if (e < 0 || e > 80) throw std::overflow_error("3^e out of supported range");
  unsigned __int128 v = 1;
  for (int i = 0; i < e; ++i) v *= 3;
  return v;
}

unsigned __int128 isqrt_u128(unsigned __int128 x) {
  if (x < 2) return x;
  unsigned __int128 lo = 1;
  unsigned __int128 hi = static_cast<unsigned __int128>(1) << 64;
  while (lo + 1 < hi) {
    unsigned __int128 mid = lo + (hi - lo) / 2;
    if (mid <= x / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t alon_furedi_min(const AFInstance& inst) {
  if (inst.sizes.empty()) throw std::invalid_argument("instance needs at least one size");
  if (inst.d < 0) throw std::invalid_argument("degree must be nonnegative");
  int vars = static_cast<int>(inst.sizes.size());
  long long total = 0;
  double log2_product = 0.0;
  for (int s : inst.sizes) {
    if (s < 1) throw std::invalid_argument("sizes must be positive");
    total += s;
    log2_product += std::log2(static_cast<double>(s));
  }
  if (log2_product > 120.0) throw std::overflow_error("size products exceed the supported range");
  // Raising any q_i never lowers the product, so the optimum uses the
  // smallest admissible sum: T = max(total - d, vars).
  long long target = std::max<long long>(total - inst.d, vars);
  // f[s] = minimum product over the processed prefix with q-sum exactly s,
  // sums above T clamped to T (excess slack never helps).
  const unsigned __int128 kUnset = ~static_cast<unsigned __int128>(0);
  std::vector<unsigned __int128> f(static_cast<std::size_t>(target) + 1, kUnset);
  f[0] = 1;
  for (int i = 0; i < vars; ++i) {
    std::vector<unsigned __int128> next(static_cast<std::size_t>(target) + 1, kUnset);
    for (long long s = 0; s <= target; ++s) {
      if (f[static_cast<std::size_t>(s)] == kUnset) continue;
      for (int q = 1; q <= inst.sizes[static_cast<std::size_t>(i)]; ++q) {
        long long s2 = std::min(s + q, target);
        unsigned __int128 prod = f[static_cast<std::size_t>(s)] * static_cast<unsigned>(q);
        if (prod < next[static_cast<std::size_t>(s2)]) next[static_cast<std::size_t>(s2)] = prod;
      }
    }
    f = std::move(next);
  }
  unsigned __int128 best = f[static_cast<std::size_t>(target)];
  if (best == kUnset) throw std::logic_error("no admissible q vector");
  if (best > kU64Max) throw std::overflow_error("minimum product exceeds uint64");
  return static_cast<std::uint64_t>(best);
}

double corollary9_bound(std::int64_t S, std::int64_t n, std::int64_t d, std::int64_t t) {
  if (t < 2) throw HypothesisError("need t >= 2");
  if (S < n + d) throw HypothesisError("need S >= n + d");
  return std::pow(static_cast<double>(t),
                  static_cast<double>(S - n - d) / static_cast<double>(t - 1));
}

double theorem5_bound(std::int64_t n, std::int64_t l) {
  if (2 * n < l) throw HypothesisError("need 2n >= l");
  return std::pow(3.0, static_cast<double>(n) - static_cast<double>(l) / 2.0);
}

std::uint64_t theorem5_ceiling(std::int64_t n, std::int64_t l) {
  if (2 * n < l) throw HypothesisError("need 2n >= l");
  std::int64_t e = 2 * n - l;  // bound is 3^(e/2)
  if (l % 2 == 0) {
    unsigned __int128 v = pow3_u128(static_cast<int>(e / 2));
    if (v > kU64Max) throw std::overflow_error("bound exceeds uint64");
    return static_cast<std::uint64_t>(v);
  }
  // Odd e: 3^e has an odd prime exponent, so it is not a perfect square
  // and the ceiling is one past the integer square root.
  unsigned __int128 root = isqrt_u128(pow3_u128(static_cast<int>(e)));
  if (root + 1 > kU64Max) throw std::overflow_error("bound exceeds uint64");
  return static_cast<std::uint64_t>(root) + 1;
}

int chi_dp_upper_from_degeneracy(const Multigraph& g) { return degeneracy(g) + 1; }

bool verify_chi_dp_le(const Multigraph& g, int m, const Limits& lim) {
  GaugeFixedFamily family(g, m);
  if (family.size_overflows() || family.size() > lim.max_covers) {
    throw GuardExceeded("gauge-fixed stream exceeds the cover guard");
  }
  for (std::uint64_t i = 0; i < family.size(); ++i) {
    if (count_colorings_capped(g, family.at(i), 1, lim).count == 0) return false;
  }
  return true;
}

Lemma8Report lemma8_check(const Multigraph& g, const Limits& lim) {
  Lemma8Report r;
  r.n = g.vertex_count();
  r.l = g.edge_count();
  r.edge_count_matches = (r.l == 2 * r.n - 3);
  r.chromatic_at_3 = chromatic_poly_eval(g, 3, lim);
  r.chi_at_least_3 = chromatic_poly_eval(g, 2, lim) == 0;
  try {
    r.uniquely_3_colorable = is_uniquely_k_colorable(g, 3, lim);
  } catch (const GuardExceeded&) {
    r.uniquely_3_colorable = false;
  }
  if (degeneracy(g) <= 2) {
    r.chi_dp_at_most_3 = true;
    r.chi_dp_evidence = "degeneracy";
  } else {
    try {
      r.chi_dp_at_most_3 = verify_chi_dp_le(g, 3, lim);
      r.chi_dp_evidence = "exhaustive";
    } catch (const GuardExceeded&) {
      r.chi_dp_at_most_3 = false;
      r.chi_dp_evidence = "unverified";
    }
  }
  r.applies = r.uniquely_3_colorable && r.chi_at_least_3 && r.chi_dp_at_most_3 &&
              r.edge_count_matches;
  return r;
}

}  // namespace dpc
