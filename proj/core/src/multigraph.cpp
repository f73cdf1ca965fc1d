#include "dpcolor/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <utility>

namespace dpc {

namespace {

// Adjacency as (neighbor, edge index) pairs so individual edge instances
// can be skipped.
std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
  }
  return adj;
}

}  // namespace

Multigraph::Multigraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    int u = std::min(e.u, e.v);
    int v = std::max(e.u, e.v);
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    edges_.push_back(Edge{u, v});
  }
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

bool Multigraph::is_simple() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) throw ParseError(line_no, "expected vertex count");
      std::string rest;
      if (fields >> rest) throw ParseError(line_no, "trailing content after vertex count");
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected edge \"u v\"");
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing content after edge");
    if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
    edges.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Multigraph(n, edges);
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Multigraph underlying_simple(const Multigraph& g) {
  std::vector<Edge> kept;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(g.vertex_count()),
                                      std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false));
  for (const Edge& e : g.edges()) {
    auto flag = seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    if (!flag) {
      seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
      kept.push_back(e);
    }
  }
  return Multigraph(g.vertex_count(), kept);
}

int degeneracy(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<int> deg = g.degrees();
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  int k = 0;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]) best = v;
    }
    k = std::max(k, deg[static_cast<std::size_t>(best)]);
    removed[static_cast<std::size_t>(best)] = true;
    for (int w = 0; w < n; ++w) {
      if (!removed[static_cast<std::size_t>(w)]) {
        deg[static_cast<std::size_t>(w)] -= mult[static_cast<std::size_t>(best)][static_cast<std::size_t>(w)];
      }
    }
  }
  return k;
}

std::optional<int> girth(const Multigraph& g) {
  // Shortest cycle through edge instance i is 1 plus the shortest u-v path
  // avoiding that instance; a surviving parallel instance gives distance 1,
  // so parallel pairs come out as 2-cycles.
  auto adj = adjacency(g);
  std::optional<int> best;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(e.u)] = 0;
    queue.push_back(e.u);
    while (!queue.empty() && dist[static_cast<std::size_t>(e.v)] < 0) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& [y, idx] : adj[static_cast<std::size_t>(x)]) {
        if (idx == i || dist[static_cast<std::size_t>(y)] >= 0) continue;
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
    int d = dist[static_cast<std::size_t>(e.v)];
    if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

int component_count(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) ++count;
  }
  return count;
}

GraphStats graph_stats(const Multigraph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.l = g.edge_count();
  s.degeneracy = degeneracy(g);
  s.girth = girth(g);
  s.components = component_count(g);
  return s;
}

std::uint64_t graph_hash(const Multigraph& g) {
  // Canonical serialization: the edge multiset in sorted order, so the key
  // ignores the order edges were listed in. Relabelings still differ.
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::string bytes = std::to_string(g.vertex_count());
  for (const Edge& e : sorted) {
    bytes += '\n';
    bytes += std::to_string(e.u);
    bytes += ' ';
    bytes += std::to_string(e.v);
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_key(const Multigraph& g) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = graph_hash(g);
  std::string key(16, '0');
  for (int i = 15; i >= 0; --i) {
    key[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return key;
}

}  // namespace dpc
