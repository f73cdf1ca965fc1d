#include "dpcolor/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dpcolor/splitmix.hpp"

namespace dpc {

namespace {

void check_cover_shape(const Multigraph& g, const FullCover& c) {
  if (static_cast<int>(c.perms.size()) != g.edge_count()) {
    throw std::invalid_argument("cover has wrong number of permutations");
  }
  for (const Permutation& p : c.perms) {
    if (p.size() != c.m) throw std::invalid_argument("cover permutation modulus mismatch");
  }
}

// Per-edge lookup rows for transversal counting. For edge e = (u,v) with
// u < v, fwd[e][z] is the v-value blocked when u holds z (or -1), bwd[e]
// the reverse direction. Partial matchings leave -1 gaps.
struct EdgeTables {
  std::vector<std::vector<int>> fwd;
  std::vector<std::vector<int>> bwd;
};

EdgeTables tables_for_cover(const FullCover& c) {
  EdgeTables t;
  t.fwd.reserve(c.perms.size());
  t.bwd.reserve(c.perms.size());
  for (const Permutation& p : c.perms) {
    t.fwd.push_back(p.images());
    t.bwd.push_back(p.inverse().images());
  }
  return t;
}

CountResult count_transversals(const Multigraph& g, int m, const EdgeTables& t,
                               std::uint64_t cap, const Limits& lim) {
  int n = g.vertex_count();
  CountResult res;
  if (n == 0) {
    res.count = 1;
    return res;
  }
  // Assign vertices in decreasing degree order; the count is order
  // independent but high-degree-first fails sooner.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg = g.degrees();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // For each vertex, the constraints coming from already assigned
  // neighbors: (earlier vertex, blocked-value row).
  struct Constraint {
    int earlier;
    const int* row;
  };
  std::vector<std::vector<Constraint>> constraints(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (pos[static_cast<std::size_t>(ed.u)] < pos[static_cast<std::size_t>(ed.v)]) {
      constraints[static_cast<std::size_t>(ed.v)].push_back({ed.u, t.fwd[static_cast<std::size_t>(e)].data()});
    } else {
      constraints[static_cast<std::size_t>(ed.u)].push_back({ed.v, t.bwd[static_cast<std::size_t>(e)].data()});
    }
  }
  std::vector<int> value(static_cast<std::size_t>(n), -1);
  std::uint64_t nodes = 0;
  bool stop = false;
  auto walk = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == n) {
      ++res.count;
      if (cap != 0 && res.count >= cap) {
        res.capped = true;
        stop = true;
      }
      return;
    }
    int v = order[static_cast<std::size_t>(depth)];
    const auto& cons = constraints[static_cast<std::size_t>(v)];
    for (int z = 0; z < m; ++z) {
      if (++nodes > lim.max_nodes_per_cover) {
        throw GuardExceeded("coloring count exceeded the per-cover node budget");
      }
      bool ok = true;
      for (const Constraint& cn : cons) {
        if (cn.row[value[static_cast<std::size_t>(cn.earlier)]] == z) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      value[static_cast<std::size_t>(v)] = z;
      self(self, depth + 1);
      value[static_cast<std::size_t>(v)] = -1;
      if (stop) return;
    }
  };
  walk(walk, 0);
  res.nodes = nodes;
  return res;
}

int parse_int_field(std::istringstream& fields, int line_no, const char* what) {
  int x = 0;
  if (!(fields >> x)) throw ParseError(line_no, std::string("expected ") + what);
  return x;
}

// Shared reader for cover and gauge files: "m=<int>" then one line of
// images per slot, "<slot>: i0 ... i_{m-1}" with slots in order 0,1,...
std::pair<int, std::vector<Permutation>> parse_perm_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int m = -1;
  std::vector<Permutation> perms;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (m < 0) {
      std::string body = line.substr(first);
      while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
      if (body.rfind("m=", 0) != 0) throw ParseError(line_no, "expected \"m=<int>\"");
      try {
        std::size_t used = 0;
        m = std::stoi(body.substr(2), &used);
        if (used != body.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected \"m=<int>\"");
      }
      if (m < 1) throw ParseError(line_no, "fold size must be positive");
      continue;
    }
    std::istringstream fields(line);
    int slot = parse_int_field(fields, line_no, "slot index");
    char colon = 0;
    if (!(fields >> colon) || colon != ':') throw ParseError(line_no, "expected ':'");
    if (slot != static_cast<int>(perms.size())) {
      throw ParseError(line_no, "slot " + std::to_string(slot) + " out of order");
    }
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) images.push_back(parse_int_field(fields, line_no, "image"));
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing content after images");
    try {
      perms.emplace_back(std::move(images));
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
  }
  if (m < 0) throw ParseError(line_no, "missing \"m=<int>\" header");
  return {m, std::move(perms)};
}

std::string serialize_perm_table(int m, const std::vector<Permutation>& perms) {
  std::ostringstream out;
  out << "m=" << m << '\n';
  for (std::size_t i = 0; i < perms.size(); ++i) {
    out << i << ':';
    for (int z = 0; z < perms[i].size(); ++z) out << ' ' << perms[i](z);
    out << '\n';
  }
  return out.str();
}

}  // namespace

FullCover identity_cover(const Multigraph& g, int m) {
  if (m < 1) throw std::invalid_argument("fold size must be positive");
  FullCover c;
  c.m = m;
  c.perms.assign(static_cast<std::size_t>(g.edge_count()), Permutation::identity(m));
  return c;
}

FullCover twist(const Multigraph& g, const FullCover& c, const Gauge& gauge) {
  check_cover_shape(g, c);
  if (gauge.m != c.m) throw std::invalid_argument("gauge modulus mismatch");
  if (static_cast<int>(gauge.pi.size()) != g.vertex_count()) {
    throw std::invalid_argument("gauge has wrong number of permutations");
  }
  for (const Permutation& p : gauge.pi) {
    if (p.size() != c.m) throw std::invalid_argument("gauge permutation modulus mismatch");
  }
  FullCover out;
  out.m = c.m;
  out.perms.reserve(c.perms.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out.perms.push_back(gauge.pi[static_cast<std::size_t>(ed.v)]
                            .compose(c.perms[static_cast<std::size_t>(e)])
                            .compose(gauge.pi[static_cast<std::size_t>(ed.u)].inverse()));
  }
  return out;
}

std::vector<int> spanning_forest_edges(const Multigraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<int> forest;
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = find(g.edge(e).u);
    int b = find(g.edge(e).v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      forest.push_back(e);
    }
  }
  return forest;
}

std::pair<FullCover, Gauge> gauge_fix(const Multigraph& g, const FullCover& c) {
  check_cover_shape(g, c);
  int n = g.vertex_count();
  std::vector<int> forest = spanning_forest_edges(g);
  std::vector<std::vector<std::pair<int, int>>> tree(static_cast<std::size_t>(n));
  for (int e : forest) {
    tree[static_cast<std::size_t>(g.edge(e).u)].emplace_back(g.edge(e).v, e);
    tree[static_cast<std::size_t>(g.edge(e).v)].emplace_back(g.edge(e).u, e);
  }
  Gauge gauge;
  gauge.m = c.m;
  gauge.pi.assign(static_cast<std::size_t>(n), Permutation::identity(c.m));
  // Walk each forest component; pi is chosen so every forest edge twists
  // to the identity.
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (visited[static_cast<std::size_t>(root)]) continue;
    visited[static_cast<std::size_t>(root)] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : tree[static_cast<std::size_t>(x)]) {
        if (visited[static_cast<std::size_t>(y)]) continue;
        visited[static_cast<std::size_t>(y)] = true;
        const Permutation& sigma = c.perms[static_cast<std::size_t>(e)];
        if (g.edge(e).u == x) {
          gauge.pi[static_cast<std::size_t>(y)] = gauge.pi[static_cast<std::size_t>(x)].compose(sigma.inverse());
        } else {
          gauge.pi[static_cast<std::size_t>(y)] = gauge.pi[static_cast<std::size_t>(x)].compose(sigma);
        }
        stack.push_back(y);
      }
    }
  }
  return {twist(g, c, gauge), std::move(gauge)};
}

GaugeFixedFamily::GaugeFixedFamily(Multigraph g, int m) : g_(std::move(g)), m_(m) {
  if (m < 1) throw std::invalid_argument("fold size must be positive");
  forest_ = spanning_forest_edges(g_);
  std::vector<bool> in_forest(static_cast<std::size_t>(g_.edge_count()), false);
  for (int e : forest_) in_forest[static_cast<std::size_t>(e)] = true;
  for (int e = 0; e < g_.edge_count(); ++e) {
    if (!in_forest[static_cast<std::size_t>(e)]) free_.push_back(e);
  }
  std::uint64_t fact = Permutation::count(m_);
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (fact != 0 && size_ > UINT64_MAX / fact) {
      overflow_ = true;
      size_ = 0;
      break;
    }
    size_ *= fact;
  }
}

FullCover GaugeFixedFamily::at(std::uint64_t index) const {
  if (!overflow_ && index >= size_) throw std::out_of_range("cover index out of range");
  FullCover c;
  c.m = m_;
  c.perms.assign(static_cast<std::size_t>(g_.edge_count()), Permutation::identity(m_));
  std::uint64_t fact = Permutation::count(m_);
  for (std::size_t i = free_.size(); i-- > 0;) {
    std::uint64_t digit = index % fact;
    index /= fact;
    c.perms[static_cast<std::size_t>(free_[i])] = Permutation::from_lex_rank(m_, digit);
  }
  return c;
}

std::uint64_t GaugeFixedFamily::index_of(const FullCover& cover) const {
  check_cover_shape(g_, cover);
  if (cover.m != m_) throw std::invalid_argument("cover fold size differs from the family");
  Permutation id = Permutation::identity(m_);
  for (int e : forest_) {
    if (!(cover.perms[static_cast<std::size_t>(e)] == id)) {
      throw std::invalid_argument("cover is not gauge-fixed: forest edge " + std::to_string(e) +
                                  " is not the identity");
    }
  }
  if (overflow_) throw std::out_of_range("stream size exceeds the index range");
  std::uint64_t fact = Permutation::count(m_);
  std::uint64_t index = 0;
  for (int e : free_) {
    index = index * fact + cover.perms[static_cast<std::size_t>(e)].lex_rank();
  }
  return index;
}

CountResult count_colorings_capped(const Multigraph& g, const FullCover& c,
                                   std::uint64_t cap, const Limits& lim) {
  check_cover_shape(g, c);
  EdgeTables t = tables_for_cover(c);
  return count_transversals(g, c.m, t, cap, lim);
}

std::uint64_t count_colorings(const Multigraph& g, const FullCover& c, const Limits& lim) {
  return count_colorings_capped(g, c, 0, lim).count;
}

ListCover list_to_cover(const Multigraph& g, const std::vector<std::vector<int>>& lists) {
  if (!g.is_simple()) throw std::invalid_argument("list embedding needs a simple graph");
  if (static_cast<int>(lists.size()) != g.vertex_count()) {
    throw std::invalid_argument("one list per vertex required");
  }
  if (lists.empty()) throw std::invalid_argument("no lists given");
  std::size_t m = lists.front().size();
  if (m == 0) throw std::invalid_argument("lists must be nonempty");
  ListCover lc;
  lc.lists.reserve(lists.size());
  for (const auto& list : lists) {
    if (list.size() != m) throw std::invalid_argument("lists must share one size");
    std::vector<int> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate color in a list");
    }
    lc.lists.push_back(std::move(sorted));
  }
  lc.cover.m = static_cast<int>(m);
  lc.cover.perms.reserve(static_cast<std::size_t>(g.edge_count()));
  lc.matched.resize(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& lu = lc.lists[static_cast<std::size_t>(ed.u)];
    const auto& lv = lc.lists[static_cast<std::size_t>(ed.v)];
    std::vector<int> images(m, -1);
    std::vector<bool> v_taken(m, false);
    // Equal colors pair up; both lists are sorted so a two-pointer sweep
    // finds every coincidence once.
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < m && b < m) {
      if (lu[a] == lv[b]) {
        images[a] = static_cast<int>(b);
        v_taken[b] = true;
        lc.matched[static_cast<std::size_t>(e)].emplace_back(static_cast<int>(a), static_cast<int>(b));
        ++a;
        ++b;
      } else if (lu[a] < lv[b]) {
        ++a;
      } else {
        ++b;
      }
    }
    // Leftover fiber indices pair in ascending order; the completion is
    // arbitrary for the list constraints but must be deterministic.
    std::size_t next_v = 0;
    for (std::size_t z = 0; z < m; ++z) {
      if (images[z] >= 0) continue;
      while (v_taken[next_v]) ++next_v;
      images[z] = static_cast<int>(next_v);
      v_taken[next_v] = true;
    }
    lc.cover.perms.emplace_back(std::move(images));
  }
  return lc;
}

std::uint64_t count_list_colorings(const Multigraph& g,
                                   const std::vector<std::vector<int>>& lists,
                                   const Limits& lim) {
  if (static_cast<int>(lists.size()) != g.vertex_count()) {
    throw std::invalid_argument("one list per vertex required");
  }
  int n = g.vertex_count();
  if (n == 0) return 1;
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) earlier[static_cast<std::size_t>(e.v)].push_back(e.u);
  std::vector<int> chosen(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  auto walk = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int color : lists[static_cast<std::size_t>(v)]) {
      if (++nodes > lim.max_nodes_per_cover) {
        throw GuardExceeded("list coloring count exceeded the node budget");
      }
      bool ok = true;
      for (int w : earlier[static_cast<std::size_t>(v)]) {
        if (chosen[static_cast<std::size_t>(w)] == color) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(v)] = color;
      self(self, v + 1);
    }
  };
  walk(walk, 0);
  return count;
}

std::uint64_t count_matched_colorings(const Multigraph& g, const ListCover& lc,
                                      const Limits& lim) {
  int m = lc.cover.m;
  EdgeTables t;
  t.fwd.assign(lc.matched.size(), std::vector<int>(static_cast<std::size_t>(m), -1));
  t.bwd.assign(lc.matched.size(), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (std::size_t e = 0; e < lc.matched.size(); ++e) {
    for (const auto& [zu, zv] : lc.matched[e]) {
      t.fwd[e][static_cast<std::size_t>(zu)] = zv;
      t.bwd[e][static_cast<std::size_t>(zv)] = zu;
    }
  }
  return count_transversals(g, m, t, 0, lim).count;
}

FullCover random_cover(const Multigraph& g, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("fold size must be positive");
  SplitMix64 rng(seed);
  FullCover c;
  c.m = m;
  c.perms.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) c.perms.push_back(Permutation::random(m, rng));
  return c;
}

std::string serialize_cover(const FullCover& c) { return serialize_perm_table(c.m, c.perms); }

FullCover parse_cover(const std::string& text) {
  auto [m, perms] = parse_perm_table(text);
  FullCover c;
  c.m = m;
  c.perms = std::move(perms);
  return c;
}

std::string serialize_gauge(const Gauge& g) { return serialize_perm_table(g.m, g.pi); }

Gauge parse_gauge(const std::string& text) {
  auto [m, perms] = parse_perm_table(text);
  Gauge g;
  g.m = m;
  g.pi = std::move(perms);
  return g;
}

}  // namespace dpc
