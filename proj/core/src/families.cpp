#include "dpcolor/families.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace dpc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Multigraph edgeless(int n) {
  require(n >= 1, "edgeless: n must be positive");
  return Multigraph(n, {});
}

Multigraph digon() { return Multigraph(2, {{0, 1}, {0, 1}}); }

Multigraph cycle(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Multigraph(n, edges);
}

Multigraph path(int n) {
  require(n >= 1, "path: n must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, edges);
}

Multigraph complete(int n) {
  require(n >= 1, "complete: n must be positive");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Multigraph(n, edges);
}

// Hub 0 joined to the cycle 1..2k+2. Spokes first, then the cycle edges
// (1,2), ..., (2k+1,2k+2), (1,2k+2).
Multigraph wheel_even(int k) {
  require(k >= 1, "wheel_even: k must be positive");
  int ring = 2 * k + 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= ring; ++i) edges.push_back({0, i});
  for (int i = 1; i < ring; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, ring});
  return Multigraph(ring + 1, edges);
}

// Hub 0 joined to the path 1..2k+2, plus the vertex z = 2k+3 adjacent to
// both path ends. Spokes, then path edges, then the two z edges.
Multigraph hk(int k) {
  require(k >= 1, "hk: k must be positive");
  int last = 2 * k + 2;
  int z = last + 1;
  std::vector<Edge> edges;
  for (int i = 1; i <= last; ++i) edges.push_back({0, i});
  for (int i = 1; i < last; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, z});
  edges.push_back({last, z});
  return Multigraph(z + 1, edges);
}

// Ends 0 and 1; the internal vertices of each path are numbered
// consecutively in path order, one path after another; edges follow each
// path from end 0 to end 1.
Multigraph theta(const std::vector<int>& lengths) {
  require(lengths.size() >= 2, "theta: need at least two paths");
  int ones = 0;
  for (int len : lengths) {
    require(len >= 1, "theta: path lengths must be positive");
    if (len == 1) ++ones;
  }
  require(ones <= 1, "theta: at most one path may have length 1");
  std::vector<Edge> edges;
  int next = 2;
  for (int len : lengths) {
    if (len == 1) {
      edges.push_back({0, 1});
      continue;
    }
    int prev = 0;
    for (int step = 1; step < len; ++step) {
      edges.push_back({std::min(prev, next), std::max(prev, next)});
      prev = next;
      ++next;
    }
    edges.push_back({std::min(prev, 1), std::max(prev, 1)});
  }
  return Multigraph(next, edges);
}

// Ring 0..19 plus the chords of the LCF word [10,7,4,-4,-7,10,-4,7,-7,4]
// repeated twice. Ring edges first, chords in discovery order.
Multigraph dodecahedron() {
  static const int word[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
  std::vector<Edge> edges;
  for (int i = 0; i < 19; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, 19});
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < 20; ++i) {
    int j = ((i + word[i % 10]) % 20 + 20) % 20;
    auto key = std::minmax(i, j);
    if (seen.insert({key.first, key.second}).second) {
      edges.push_back({key.first, key.second});
    }
  }
  return Multigraph(20, edges);
}

Multigraph c5() { return cycle(5); }

Multigraph family_generate(const std::string& name, const std::vector<int>& params) {
  auto one = [&](const char* what) {
    require(params.size() == 1, std::string(name) + ": expected one parameter (" + what + ")");
    return params[0];
  };
  auto none = [&]() {
    require(params.empty(), std::string(name) + ": takes no parameters");
  };
  if (name == "edgeless") return edgeless(one("n"));
  if (name == "digon") {
    none();
    return digon();
  }
  if (name == "cycle") return cycle(one("n"));
  if (name == "path") return path(one("n"));
  if (name == "complete") return complete(one("n"));
  if (name == "wheel_even") return wheel_even(one("k"));
  if (name == "hk") return hk(one("k"));
  if (name == "theta") return theta(params);
  if (name == "dodecahedron") {
    none();
    return dodecahedron();
  }
  if (name == "c5") {
    none();
    return c5();
  }
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<std::string> family_names() {
  return {"edgeless", "digon", "cycle",       "path",         "complete",
          "wheel_even", "hk",  "theta",       "dodecahedron", "c5"};
}

}  // namespace dpc
