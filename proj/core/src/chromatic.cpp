#include "dpcolor/chromatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dpc {

namespace {

// Working form for deletion/contraction: simple graph as a sorted unique
// edge list.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
};

SimpleGraph to_simple(const Multigraph& g) {
  SimpleGraph s;
  s.n = g.vertex_count();
  s.edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) s.edges.emplace_back(e.u, e.v);
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

int components_of(const SimpleGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [u, v] : g.edges) {
    int a = find(u);
    int b = find(v);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int c = 0;
  for (int i = 0; i < g.n; ++i) {
    if (find(i) == i) ++c;
  }
  return c;
}

// Memo key: relabel vertices by two rounds of degree refinement (stable,
// index tie-break) and serialize the sorted relabeled edge list. Two
// graphs with equal keys are equal as labeled graphs after their own
// relabelings, hence isomorphic, so sharing memo entries is sound even
// though isomorphic graphs may still get distinct keys.
std::string canonical_key(const SimpleGraph& g) {
  std::vector<std::uint64_t> label(static_cast<std::size_t>(g.n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < g.n; ++v) label[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)].size();
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::uint64_t> around;
      around.reserve(adj[static_cast<std::size_t>(v)].size());
      for (int w : adj[static_cast<std::size_t>(v)]) around.push_back(label[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = label[static_cast<std::size_t>(v)] * 0x9e3779b97f4a7c15ULL + 1;
      for (std::uint64_t x : around) h = (h ^ x) * 0x100000001b3ULL;
      next[static_cast<std::size_t>(v)] = h;
    }
    label = std::move(next);
  }
  std::vector<int> order(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return label[static_cast<std::size_t>(a)] < label[static_cast<std::size_t>(b)];
  });
  std::vector<int> pos(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::pair<int, int>> relabeled;
  relabeled.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    int a = pos[static_cast<std::size_t>(u)];
    int b = pos[static_cast<std::size_t>(v)];
    relabeled.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::ostringstream out;
  out << g.n << ';';
  for (const auto& [u, v] : relabeled) out << u << ',' << v << ' ';
  return out.str();
}

std::int64_t checked_int64(unsigned __int128 magnitude, bool negative) {
  constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(INT64_MAX);
  if (magnitude > kMax) throw std::overflow_error("chromatic value exceeds int64");
  std::int64_t v = static_cast<std::int64_t>(magnitude);
  return negative ? -v : v;
}

// m^a (m-1)^b with overflow checking.
std::int64_t forest_value(int m, int a, int b) {
  unsigned __int128 v = 1;
  constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(INT64_MAX);
  for (int i = 0; i < a; ++i) {
    v *= static_cast<unsigned>(m);
    if (v > kMax) throw std::overflow_error("chromatic value exceeds int64");
  }
  for (int i = 0; i < b; ++i) {
    v *= static_cast<unsigned>(m - 1);
    if (v > kMax) throw std::overflow_error("chromatic value exceeds int64");
  }
  return static_cast<std::int64_t>(v);
}

struct EvalContext {
  int m = 0;
  std::uint64_t calls = 0;
  std::uint64_t max_calls = 0;
  std::map<std::string, std::int64_t> memo;
};

SimpleGraph delete_edge(const SimpleGraph& g, std::size_t idx) {
  SimpleGraph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size() - 1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != idx) out.edges.push_back(g.edges[i]);
  }
  return out;
}

SimpleGraph contract_edge(const SimpleGraph& g, std::size_t idx) {
  auto [cu, cv] = g.edges[idx];
  SimpleGraph out;
  out.n = g.n - 1;
  std::set<std::pair<int, int>> unique_edges;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == idx) continue;
    auto remap = [&](int w) {
      if (w == cv) w = cu;
      return w > cv ? w - 1 : w;
    };
    int a = remap(g.edges[i].first);
    int b = remap(g.edges[i].second);
    if (a == b) continue;  // cannot happen in a simple graph, kept defensive
    unique_edges.insert({std::min(a, b), std::max(a, b)});
  }
  out.edges.assign(unique_edges.begin(), unique_edges.end());
  return out;
}

std::int64_t eval_rec(const SimpleGraph& g, EvalContext& ctx) {
  if (++ctx.calls > ctx.max_calls) {
    throw GuardExceeded("deletion/contraction exceeded " + std::to_string(ctx.max_calls) + " calls");
  }
  int c = components_of(g);
  if (static_cast<int>(g.edges.size()) == g.n - c) {
    return forest_value(ctx.m, c, g.n - c);  // disjoint trees
  }
  std::string key = canonical_key(g);
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;
  std::int64_t del = eval_rec(delete_edge(g, 0), ctx);
  std::int64_t con = eval_rec(contract_edge(g, 0), ctx);
  std::int64_t value = del - con;
  ctx.memo.emplace(std::move(key), value);
  return value;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace

std::int64_t chromatic_poly_eval(const Multigraph& g, int m, const Limits& lim) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  SimpleGraph s = to_simple(g);
  if (m == 1) return s.edges.empty() ? 1 : 0;
  EvalContext ctx;
  ctx.m = m;
  ctx.max_calls = lim.max_states;
  return eval_rec(s, ctx);
}

int chromatic_number(const Multigraph& g, const Limits& lim) {
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int m = 2; m <= g.vertex_count(); ++m) {
    if (chromatic_poly_eval(g, m, lim) > 0) return m;
  }
  return g.vertex_count();
}

bool is_uniquely_k_colorable(const Multigraph& g, int k, const Limits& lim) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  int n = g.vertex_count();
  if (checked_pow(static_cast<std::uint64_t>(k), n, lim.max_states) > lim.max_states) {
    throw GuardExceeded("k^n exceeds the state guard");
  }
  Multigraph simple = underlying_simple(g);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : simple.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  // Collect colorings normalized by first occurrence; two colorings induce
  // the same partition exactly when they normalize identically.
  std::set<std::vector<int>> partitions;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto normalized = [&]() {
    std::vector<int> norm(static_cast<std::size_t>(n), -1);
    std::vector<int> rename(static_cast<std::size_t>(k), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
      int c = color[static_cast<std::size_t>(v)];
      if (rename[static_cast<std::size_t>(c)] < 0) rename[static_cast<std::size_t>(c)] = next++;
      norm[static_cast<std::size_t>(v)] = rename[static_cast<std::size_t>(c)];
    }
    return norm;
  };
  bool more_than_one = false;
  auto assign = [&](auto&& self, int v) -> void {
    if (more_than_one) return;
    if (v == n) {
      partitions.insert(normalized());
      if (partitions.size() > 1) more_than_one = true;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w < v && color[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
      color[static_cast<std::size_t>(v)] = -1;
    }
  };
  assign(assign, 0);
  return !more_than_one && partitions.size() == 1;
}

std::int64_t uniquely_colorable_edge_bound(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  return (k - 1) * n - k * (k - 1) / 2;
}

}  // namespace dpc
