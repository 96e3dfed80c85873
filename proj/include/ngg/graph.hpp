#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ngg {

// Raised when an input string (graph spec, graph file, rule descriptor)
// does not parse; carries a human-readable position.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by desk-scale algorithms (automorphism search, classical
// isomorphism, box construction) when the input exceeds the configured
// vertex limit. Never silent.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph distance: a natural number or infinity. Infinity is a first-class
// value, not a sentinel the caller has to know about; it compares greater
// than every finite distance.
class Dist {
 public:
  constexpr Dist() : v_(-1) {}
  static constexpr Dist finite(int d) {
    Dist x;
    x.v_ = d;
    return x;
  }
  static constexpr Dist infinity() { return Dist(); }

  constexpr bool is_finite() const { return v_ >= 0; }
  int value() const {
    if (!is_finite()) throw std::logic_error("value() on infinite distance");
    return v_;
  }

  friend constexpr bool operator==(Dist a, Dist b) { return a.v_ == b.v_; }
  friend constexpr bool operator==(Dist a, int b) { return a.v_ >= 0 && a.v_ == b; }
  friend constexpr bool operator<(Dist a, Dist b) {
    if (a.is_finite() && b.is_finite()) return a.v_ < b.v_;
    return a.is_finite() && !b.is_finite();
  }
  friend constexpr bool operator<(Dist a, int b) { return a.is_finite() && a.v_ < b; }
  friend constexpr bool operator<=(Dist a, int b) { return a.is_finite() && a.v_ <= b; }
  friend constexpr bool operator>(Dist a, int b) { return !(a <= b); }

  std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

 private:
  int v_;  // -1 encodes infinity; never exposed
};

// Finite undirected loopless graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

struct DistanceMatrix {
  int n = 0;
  std::vector<Dist> d;
  Dist at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
  Dist& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

// 0/1 matrix; holds distance-t adjacency indicators.
struct ZeroOneMatrix {
  int n = 0;
  std::vector<int> a;
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(int n) : n(n), a(static_cast<std::size_t>(n) * n, 0) {}
  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  bool is_zero() const {
    for (int x : a)
      if (x) return false;
    return true;
  }
  friend bool operator==(const ZeroOneMatrix& x, const ZeroOneMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
};

// Named families. Vertices are labeled 0..n-1; cycles run clockwise
// (i adjacent to i+1 mod n), paths are cycles minus the closing edge.
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
Graph path_graph(int n);      // n >= 1
Graph petersen_graph();
Graph complete_bipartite_graph(int a, int b);

Graph disjoint_union(const Graph& g, const Graph& h);

DistanceMatrix all_pairs_distance(const Graph& g);

struct ComponentsInfo {
  std::vector<std::vector<int>> components;  // ordered by smallest member
  int diameter = 0;                          // max finite distance; 0 if edgeless
};
ComponentsInfo components_and_diameter(const Graph& g);

// Entry (i,j) = 1 iff d(i,j) = t. t = 0 gives the identity; t beyond the
// diameter gives the zero matrix.
ZeroOneMatrix d_adjacency(const Graph& g, int t);
ZeroOneMatrix d_adjacency(const DistanceMatrix& dm, int t);

// Graph spec grammar:
//   cycle:n | complete:n | path:n | petersen | k33
//   | union(spec,spec) | file:<path>
// File format: first line "n <count>", then one "e u v" line per edge.
Graph parse_graph_spec(const std::string& spec);
Graph build_named_graph(const std::string& spec);  // alias of parse_graph_spec
Graph read_graph_text(std::istream& in, const std::string& origin);

std::string graph_to_text(const Graph& g);

}  // namespace ngg
