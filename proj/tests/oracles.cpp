#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dpc::oracle {

namespace {

// Walk all n-digit words over base m in lexicographic order, calling fn
// with each word. Bases up to word counts around 10^8 are practical.
template <typename Fn>
void for_each_word(int n, int m, Fn&& fn) {
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == m - 1) {
      x[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

}  // namespace

std::uint64_t proper_colorings(const Multigraph& g, int m) {
  if (m <= 0) return 0;
  std::uint64_t total = 0;
  for_each_word(g.vertex_count(), m, [&](const std::vector<int>& x) {
    for (const Edge& e : g.edges()) {
      if (x[static_cast<std::size_t>(e.u)] == x[static_cast<std::size_t>(e.v)]) return;
    }
    ++total;
  });
  return total;
}

std::uint64_t cover_colorings(const Multigraph& g, const FullCover& c) {
  std::uint64_t total = 0;
  for_each_word(g.vertex_count(), c.m, [&](const std::vector<int>& x) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      if (x[static_cast<std::size_t>(e.v)] == c.perms[i](x[static_cast<std::size_t>(e.u)])) {
        return;
      }
    }
    ++total;
  });
  return total;
}

std::uint64_t list_colorings(const Multigraph& g,
                             const std::vector<std::vector<int>>& lists) {
  int n = g.vertex_count();
  if (static_cast<int>(lists.size()) != n) throw std::invalid_argument("one list per vertex");
  for (const auto& list : lists) {
    if (list.empty()) return 0;
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      int cu = lists[static_cast<std::size_t>(e.u)][pick[static_cast<std::size_t>(e.u)]];
      int cv = lists[static_cast<std::size_t>(e.v)][pick[static_cast<std::size_t>(e.v)]];
      if (cu == cv) {
        proper = false;
        break;
      }
    }
    if (proper) ++total;
    int i = n - 1;
    while (i >= 0 &&
           pick[static_cast<std::size_t>(i)] + 1 == lists[static_cast<std::size_t>(i)].size()) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return total;
    ++pick[static_cast<std::size_t>(i)];
  }
}

std::uint64_t matched_colorings(
    const Multigraph& g, int m,
    const std::vector<std::vector<std::pair<int, int>>>& matched) {
  if (matched.size() != g.edges().size()) throw std::invalid_argument("one pair list per edge");
  std::uint64_t total = 0;
  for_each_word(g.vertex_count(), m, [&](const std::vector<int>& x) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      int xu = x[static_cast<std::size_t>(e.u)];
      int xv = x[static_cast<std::size_t>(e.v)];
      for (const auto& [a, b] : matched[i]) {
        if (xu == a && xv == b) return;
      }
    }
    ++total;
  });
  return total;
}

AllCoversMin min_over_all_covers(const Multigraph& g, int m) {
  std::uint64_t fact = Permutation::count(m);
  std::size_t l = g.edges().size();
  double log_total = static_cast<double>(l) * std::log2(static_cast<double>(fact));
  if (log_total > 28) throw std::invalid_argument("cover space too large for the oracle");

  std::vector<std::uint64_t> ranks(l, 0);
  FullCover c;
  c.m = m;
  c.perms.assign(l, Permutation::identity(m));
  AllCoversMin out;
  out.value = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    std::uint64_t count = cover_colorings(g, c);
    ++out.covers;
    if (count < out.value) out.value = count;
    std::size_t i = l;
    while (i-- > 0) {
      if (ranks[i] + 1 < fact) {
        ++ranks[i];
        c.perms[i] = Permutation::from_lex_rank(m, ranks[i]);
        break;
      }
      ranks[i] = 0;
      c.perms[i] = Permutation::identity(m);
    }
    bool wrapped = true;
    for (std::uint64_t r : ranks) {
      if (r != 0) {
        wrapped = false;
        break;
      }
    }
    if (wrapped) break;
  }
  return out;
}

std::uint64_t grid_min(const std::vector<int>& sizes, int d) {
  for (int a : sizes) {
    if (a < 1) throw std::invalid_argument("grid sizes must be positive");
  }
  long long s = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  long long need = s - d;
  std::vector<int> q(sizes.size(), 1);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    long long sum = std::accumulate(q.begin(), q.end(), 0LL);
    if (sum >= need) {
      std::uint64_t prod = 1;
      for (int v : q) prod *= static_cast<std::uint64_t>(v);
      if (prod < best) best = prod;
    }
    std::size_t i = q.size();
    bool advanced = false;
    while (i-- > 0) {
      if (q[i] < sizes[i]) {
        ++q[i];
        for (std::size_t j = i + 1; j < q.size(); ++j) q[j] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

std::vector<Multigraph> all_simple_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 20) throw std::invalid_argument("too many vertex pairs to enumerate");
  std::vector<Multigraph> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) edges.push_back(Edge{pairs[i].first, pairs[i].second});
    }
    out.emplace_back(n, edges);
  }
  return out;
}

Multigraph random_multigraph(int n, int max_edges, SplitMix64& rng) {
  int l = max_edges > 0 ? static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_edges + 1))
                        : 0;
  if (n < 2) l = 0;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
    if (v >= u) ++v;
    edges.push_back(Edge{u, v});
  }
  return Multigraph(n, edges);
}

Multigraph random_tree(int n, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(v));
    edges.push_back(Edge{u, v});
  }
  return Multigraph(n, edges);
}

}  // namespace dpc::oracle
