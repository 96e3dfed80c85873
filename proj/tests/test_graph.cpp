#include <doctest.h>

#include <sstream>

#include "ngg/graph.hpp"
#include "test_helpers.hpp"

using namespace ngg;
using namespace ngg::testing;

TEST_CASE("named graph constructors") {
  Graph c6 = parse_graph_spec("cycle:6");
  CHECK(c6.n == 6);
  CHECK(c6.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  Graph k1 = parse_graph_spec("complete:1");
  CHECK(k1.n == 1);
  CHECK(k1.edge_count() == 0);

  // Degree sequence of the Petersen graph by direct count.
  Graph pet = parse_graph_spec("petersen");
  CHECK(pet.n == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < pet.n; ++v) CHECK(pet.degree(v) == 3);

  CHECK_THROWS_AS(parse_graph_spec("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("complete:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("cycle:6junk"), ParseError);
}

TEST_CASE("disjoint union") {
  Graph a = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(a.n == 6);
  CHECK(a.edge_count() == 6);
  CHECK(components_and_diameter(a).components.size() == 2);

  Graph b = disjoint_union(complete_graph(1), complete_graph(1));
  CHECK(b.n == 2);
  CHECK(b.edge_count() == 0);

  Graph c = disjoint_union(cycle_graph(4), complete_graph(2));
  CHECK(c.n == 6);
  CHECK(c.edge_count() == 5);

  // No cross edges; h relabeled by offset.
  for (auto [u, v] : a.edges) CHECK(((u < 3 && v < 3) || (u >= 3 && v >= 3)));
}

TEST_CASE("all-pairs distances match the Floyd-Warshall oracle") {
  for (const auto& [name, g] : graph_zoo()) {
    CAPTURE(name);
    DistanceMatrix dm = all_pairs_distance(g);
    auto oracle = floyd_warshall(g);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        if (oracle[i][j] >= fw_unreachable) {
          CHECK(!dm.at(i, j).is_finite());
        } else {
          CHECK(dm.at(i, j) == static_cast<int>(oracle[i][j]));
        }
      }
  }
}

TEST_CASE("distance examples") {
  DistanceMatrix c6 = all_pairs_distance(cycle_graph(6));
  CHECK(c6.at(0, 3) == 3);
  CHECK(c6.at(2, 2) == 0);

  Graph cc = disjoint_union(cycle_graph(3), cycle_graph(3));
  DistanceMatrix dm = all_pairs_distance(cc);
  CHECK(!dm.at(0, 4).is_finite());
  // Symmetry and triangle inequality on finite entries.
  for (int i = 0; i < cc.n; ++i)
    for (int j = 0; j < cc.n; ++j) {
      CHECK(dm.at(i, j) == dm.at(j, i));
      for (int k = 0; k < cc.n; ++k)
        if (dm.at(i, k).is_finite() && dm.at(k, j).is_finite())
          CHECK(!(dm.at(i, j) > dm.at(i, k).value() + dm.at(k, j).value()));
    }
}

TEST_CASE("components and diameter") {
  auto c6 = components_and_diameter(cycle_graph(6));
  CHECK(c6.components.size() == 1);
  CHECK(c6.diameter == 3);

  auto kk = components_and_diameter(disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(kk.components.size() == 2);
  CHECK(kk.diameter == 1);

  auto k1 = components_and_diameter(complete_graph(1));
  CHECK(k1.components.size() == 1);
  CHECK(k1.diameter == 0);

  // Edgeless graph has diameter 0.
  auto empty3 = components_and_diameter(complete_graph(3).complement());
  CHECK(empty3.diameter == 0);
  CHECK(empty3.components.size() == 3);
}

namespace {

// The power-matrix route: entry of A^t counts walks, so the first t with a
// nonzero entry is the distance. Evaluated with plain integer powers.
ZeroOneMatrix d_adjacency_by_walk_counts(const Graph& g, int t) {
  int n = g.n;
  std::vector<std::vector<long>> pw(n, std::vector<long>(n, 0)), adj = pw;
  for (int v = 0; v < n; ++v) pw[v][v] = 1;
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> first_reach(static_cast<std::size_t>(n) * n, -1);
  for (int v = 0; v < n; ++v) first_reach[static_cast<std::size_t>(v) * n + v] = 0;
  for (int step = 1; step <= t; ++step) {
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (pw[i][k])
          for (int j = 0; j < n; ++j) next[i][j] += pw[i][k] * adj[k][j];
    pw = std::move(next);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (pw[i][j] && first_reach[static_cast<std::size_t>(i) * n + j] < 0)
          first_reach[static_cast<std::size_t>(i) * n + j] = step;
  }
  ZeroOneMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (first_reach[static_cast<std::size_t>(i) * n + j] == t) m.at(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("d-adjacency examples") {
  ZeroOneMatrix a2 = d_adjacency(cycle_graph(6), 2);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      bool expected = (j == (i + 2) % 6) || (j == (i + 4) % 6);
      CHECK(a2.at(i, j) == (expected ? 1 : 0));
    }

  for (const auto& [name, g] : graph_zoo(8)) {
    ZeroOneMatrix a0 = d_adjacency(g, 0);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) CHECK(a0.at(i, j) == (i == j ? 1 : 0));
  }

  Graph cc = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(d_adjacency(cc, 2).is_zero());
}

TEST_CASE("d-adjacency agrees with the walk-count route on graphs <= 10 vertices") {
  for (const auto& [name, g] : graph_zoo(10)) {
    CAPTURE(name);
    int diam = components_and_diameter(g).diameter;
    for (int t = 0; t <= diam + 1; ++t)
      CHECK(d_adjacency(g, t) == d_adjacency_by_walk_counts(g, t));
  }
}

TEST_CASE("distance classes partition all vertex pairs") {
  for (const auto& [name, g] : graph_zoo(10)) {
    CAPTURE(name);
    auto info = components_and_diameter(g);
    DistanceMatrix dm = all_pairs_distance(g);
    std::vector<std::vector<int>> total(g.n, std::vector<int>(g.n, 0));
    for (int t = 0; t <= info.diameter; ++t) {
      ZeroOneMatrix at = d_adjacency(g, t);
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) total[i][j] += at.at(i, j);
    }
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        total[i][j] += dm.at(i, j).is_finite() ? 0 : 1;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) CHECK(total[i][j] == 1);
  }
}

TEST_CASE("union d-adjacency is block diagonal") {
  Graph g = cycle_graph(5), h = path_graph(4);
  Graph u = disjoint_union(g, h);
  for (int t = 1; t <= 4; ++t) {
    ZeroOneMatrix au = d_adjacency(u, t);
    ZeroOneMatrix ag = d_adjacency(g, t);
    ZeroOneMatrix ah = d_adjacency(h, t);
    for (int i = 0; i < u.n; ++i)
      for (int j = 0; j < u.n; ++j) {
        int expected = 0;
        if (i < g.n && j < g.n) expected = ag.at(i, j);
        if (i >= g.n && j >= g.n) expected = ah.at(i - g.n, j - g.n);
        CHECK(au.at(i, j) == expected);
      }
  }
}

TEST_CASE("graph text format round-trips and reports parse errors") {
  Graph g = petersen_graph();
  std::istringstream in(graph_to_text(g));
  Graph back = read_graph_text(in, "mem");
  CHECK(back == g);

  std::istringstream bad("n 3\ne 0 seven\n");
  CHECK_THROWS_WITH_AS(read_graph_text(bad, "mem"), "mem:2: malformed edge line",
                       ParseError);
  std::istringstream loop("n 3\ne 1 1\n");
  CHECK_THROWS_AS(read_graph_text(loop, "mem"), ParseError);
  std::istringstream range("n 3\ne 0 3\n");
  CHECK_THROWS_AS(read_graph_text(range, "mem"), ParseError);
}

TEST_CASE("spec grammar: nested unions and files") {
  Graph u = parse_graph_spec("union(cycle:5,cycle:5)");
  CHECK(u.n == 10);
  CHECK(u.edge_count() == 10);

  Graph nested = parse_graph_spec("union(union(complete:2,complete:2),path:3)");
  CHECK(nested.n == 7);
  CHECK(nested.edge_count() == 4);
}

TEST_CASE("distance values are explicit about infinity") {
  Dist inf = Dist::infinity();
  Dist three = Dist::finite(3);
  CHECK(!inf.is_finite());
  CHECK(three < inf);
  CHECK(!(inf < three));
  CHECK(inf > 1000);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK(three == 3);
  CHECK(!(inf == 0));
}
