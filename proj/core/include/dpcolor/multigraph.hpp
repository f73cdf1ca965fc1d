#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

// One edge instance of a loopless multigraph, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Loopless multigraph with an ordered edge list. Vertices are 0..n-1,
// parallel edges are repeated entries, and the position of an edge in
// the list identifies the edge instance (cover files index into it), so
// edge order is part of the value.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  std::vector<int> degrees() const;  // parallel edges count toward degree
  bool is_simple() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct GraphStats {
  int n = 0;
  int l = 0;
  int degeneracy = 0;
  std::optional<int> girth;  // empty means acyclic
  int components = 0;
};

// File format: first line is the vertex count, every following
// non-empty line is "u v"; '#' starts a comment line. Repeated lines are
// parallel edges. serialize_graph reproduces edge order exactly.
Multigraph parse_graph(const std::string& text);
std::string serialize_graph(const Multigraph& g);

Multigraph underlying_simple(const Multigraph& g);
int degeneracy(const Multigraph& g);
std::optional<int> girth(const Multigraph& g);
int component_count(const Multigraph& g);
GraphStats graph_stats(const Multigraph& g);

// FNV-1a over the exact serialization. Labeled-graph identity only; two
// isomorphic graphs with different labelings get different keys.
std::uint64_t graph_hash(const Multigraph& g);
std::string graph_key(const Multigraph& g);

}  // namespace dpc
