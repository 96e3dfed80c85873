#include <doctest.h>

#include "ngg/automorphism.hpp"
#include "ngg/frac_iso.hpp"
#include "ngg/game.hpp"
#include "ngg/strategy.hpp"
#include "test_helpers.hpp"

using namespace ngg;
using namespace ngg::testing;

namespace {

NonlocalBox c6_k3k3_strategy(Graph& g, Graph& h) {
  g = cycle_graph(6);
  h = disjoint_union(complete_graph(3), complete_graph(3));
  auto p = common_equitable_partition(g, h, 1);
  REQUIRE(p.has_value());
  return strategy_from_partition(*p, g, h, 1);
}

}  // namespace

TEST_CASE("partition strategy values on (C6, K3+K3)") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  DistanceMatrix dg = all_pairs_distance(g);
  DistanceMatrix dh = all_pairs_distance(h);

  for (int ga = 0; ga < 6; ++ga)
    for (int gb = 0; gb < 6; ++gb)
      for (int ha = 0; ha < 6; ++ha)
        for (int hb = 0; hb < 6; ++hb) {
          Rat v = box.p(ga, gb, 6 + ha, 6 + hb);
          Dist dgg = dg.at(ga, gb), dhh = dh.at(ha, hb);
          if (dgg == 0 && dhh == 0) {
            CHECK(v == rat(1, 6));
          } else if (dgg == 1 && dhh == 1) {
            CHECK(v == rat(1, 12));
          } else if (dgg > 1 && dhh > 1) {
            CHECK(v == rat(1, 18));
          } else {
            CHECK(v == 0);
          }
        }
}

TEST_CASE("partition strategies are non-signalling and perfect") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  CHECK(verify_box(box).pass());
  CHECK(is_perfect(box, GameRule::d_distance(g, h, 1)));
  CHECK(is_perfect(box, GameRule::isomorphism(g, h)));

  // Marginals are 1/n_i on the h side of each question.
  for (int ga = 0; ga < 6; ++ga)
    for (int ha = 0; ha < 6; ++ha) {
      Rat m = 0;
      for (int y = 0; y < 12; ++y) m += box.p(ga, 0, 6 + ha, y);
      CHECK(m == rat(1, 6));
    }
}

TEST_CASE("identity partition of a graph with itself is the deterministic strategy") {
  Graph g = path_graph(3);
  std::vector<std::vector<int>> singletons{{0}, {1}, {2}};
  auto p = make_paired_partition(g, g, singletons, singletons, 1);
  NonlocalBox box = strategy_from_partition(p, g, g, 1);
  for (int v = 0; v < 3; ++v) CHECK(box.p(v, v, 3 + v, 3 + v) == 1);
  CHECK(is_perfect(box, GameRule::d_distance(g, g, 1)));
}

TEST_CASE("cycle family strategy is perfect at d and imperfect at d + 1") {
  for (int d = 1; d <= 2; ++d) {
    CAPTURE(d);
    CyclePair cp = paired_cycle_family(d);
    auto p = common_equitable_partition(cp.even_cycle, cp.two_cycles, d);
    REQUIRE(p.has_value());
    NonlocalBox box = strategy_from_partition(*p, cp.even_cycle, cp.two_cycles, d);
    CHECK(verify_box(box).pass());
    CHECK(is_perfect(box, GameRule::d_distance(cp.even_cycle, cp.two_cycles, d)));
    auto harder = winning_probability(box, GameRule::d_distance(cp.even_cycle, cp.two_cycles, d + 1));
    CHECK(harder.worst_case < 1);
  }
}

TEST_CASE("coloring strategy values and marginals") {
  NonlocalBox box = coloring_strategy(3, 2);
  CHECK(box.p(0, 0, 0, 0) == rat(1, 2));
  CHECK(box.p(0, 0, 1, 1) == rat(1, 2));
  CHECK(box.p(0, 0, 0, 1) == 0);
  CHECK(box.p(0, 1, 0, 1) == rat(1, 2));
  CHECK(verify_box(box).pass());
  CHECK(is_perfect(box, GameRule::coloring(complete_graph(3), 2)));

  // Uniform 1/N marginals.
  NonlocalBox b43 = coloring_strategy(4, 3);
  CHECK(verify_box(b43).pass());
  for (int q = 0; q < 4; ++q)
    for (int c = 0; c < 3; ++c) {
      Rat m = 0;
      for (int cb = 0; cb < 3; ++cb) m += b43.p(q, 0, c, cb);
      CHECK(m == rat(1, 3));
    }
  CHECK(winning_probability(b43, GameRule::coloring(complete_graph(4), 3)).uniform_average == 1);

  CHECK_THROWS_AS(coloring_strategy(1, 2), std::invalid_argument);
}

TEST_CASE("symmetric profile of (C6, K3+K3)") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  auto prof = symmetric_profile(box, g, h, {0, 1, 2}, {3, 4, 5});
  REQUIRE(prof.has_value());
  CHECK(prof->eta == rat(1, 2));
  DistanceMatrix dg = all_pairs_distance(g);
  for (int ga = 0; ga < 6; ++ga)
    for (int gb = 0; gb < 6; ++gb) {
      Rat expected = dg.at(ga, gb) > 1 ? rat(1, 2) : Rat(0);
      CHECK(prof->nu.at({ga, gb}) == expected);
    }
}

TEST_CASE("symmetric profile of (C8, C4+C4)") {
  Graph g = cycle_graph(8);
  Graph h = disjoint_union(cycle_graph(4), cycle_graph(4));
  auto p = common_equitable_partition(g, h, 1);
  REQUIRE(p.has_value());
  NonlocalBox box = strategy_from_partition(*p, g, h, 1);
  auto prof = symmetric_profile(box, g, h, {0, 1, 2, 3}, {4, 5, 6, 7});
  REQUIRE(prof.has_value());
  CHECK(prof->eta == rat(1, 2));
  DistanceMatrix dg = all_pairs_distance(g);
  for (int ga = 0; ga < 8; ++ga)
    for (int gb = 0; gb < 8; ++gb) {
      Rat expected = dg.at(ga, gb) > 1 ? rat(2, 5) : Rat(0);
      CHECK(prof->nu.at({ga, gb}) == expected);
    }
}

TEST_CASE("symmetric profile closed forms under condition (H)") {
  // nu = |D_i cap H1| |D_j cap H2| / (n_i cbar_ij) on far pairs, and
  // eta = |D_i cap H1| / n_i, for the k = 1 partitions above.
  Graph g = cycle_graph(8);
  Graph h = disjoint_union(cycle_graph(4), cycle_graph(4));
  auto p = common_equitable_partition(g, h, 1);
  REQUIRE(p.has_value());
  REQUIRE(p->k == 1);
  CHECK(check_condition_h(*p, h, {0, 1, 2, 3}, {4, 5, 6, 7}));
  Rat nu_closed = rat(4 * 4, 8L * p->cbar[0][0]);
  CHECK(nu_closed == rat(2, 5));
  Rat eta_closed = rat(4, 8);
  CHECK(eta_closed == rat(1, 2));
}

TEST_CASE("symmetric profile closed forms on a two-cell partition") {
  // L3 + L3 against itself: cells are {ends} (size 4) and {middles} (size
  // 2); the component split puts half of each cell on each side, so
  // condition (H) holds with ratio 1/2.
  Graph g = disjoint_union(path_graph(3), path_graph(3));
  auto p = common_equitable_partition(g, g, 1);
  REQUIRE(p.has_value());
  REQUIRE(p->k == 2);
  std::vector<int> h1{0, 1, 2}, h2{3, 4, 5};
  CHECK(check_condition_h(*p, g, h1, h2));

  NonlocalBox box = strategy_from_partition(*p, g, g, 1);
  auto prof = symmetric_profile(box, g, g, h1, h2);
  REQUIRE(prof.has_value());
  CHECK(prof->eta == rat(1, 2));

  std::vector<int> cell_of(g.n);
  for (int i = 0; i < p->k; ++i)
    for (int v : p->cells_g[i]) cell_of[v] = i;
  DistanceMatrix dm = all_pairs_distance(g);
  std::vector<int> in_h1(g.n, 0);
  for (int v : h1) in_h1[v] = 1;
  for (int ga = 0; ga < g.n; ++ga)
    for (int gb = 0; gb < g.n; ++gb) {
      Rat expected = 0;
      if (dm.at(ga, gb) > 1) {
        int i = cell_of[ga], j = cell_of[gb];
        long d_i_h1 = 0, d_j_h2 = 0;
        for (int v : p->cells_h[i]) d_i_h1 += in_h1[v];
        for (int v : p->cells_h[j]) d_j_h2 += 1 - in_h1[v];
        expected = rat(d_i_h1 * d_j_h2, static_cast<long>(p->sizes[i]) * p->cbar[i][j]);
      }
      CHECK(prof->nu.at({ga, gb}) == expected);
    }
}

TEST_CASE("profile is empty without a valid split or perfection") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  // Split cutting a component: invalid, empty result.
  CHECK(!symmetric_profile(box, g, h, {0, 1}, {2, 3, 4, 5}).has_value());
  // Connected h never splits.
  Graph c6 = cycle_graph(6);
  auto p = common_equitable_partition(g, c6, 1);
  REQUIRE(p.has_value());
  NonlocalBox box2 = strategy_from_partition(*p, g, c6, 1);
  CHECK(!symmetric_profile(box2, g, c6, {0, 1, 2}, {3, 4, 5}).has_value());
}

TEST_CASE("symmetrize with the identity leaves the box unchanged") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  NonlocalBox same = symmetrize(box, g, h, {{0, 1, 2, 3, 4, 5}});
  CHECK(same == box);
}

TEST_CASE("symmetrize rejects non-automorphisms") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  CHECK_THROWS_AS(symmetrize(box, g, h, {}), std::invalid_argument);
  // Swapping across the two triangles vertex-by-vertex breaks adjacency.
  CHECK_THROWS_AS(symmetrize(box, g, h, {{0, 1, 3, 2, 4, 5}}), std::invalid_argument);
}

TEST_CASE("symmetrizing over Aut(K3+K3) hits the closed form") {
  Graph g, h;
  NonlocalBox box = c6_k3k3_strategy(g, h);
  AutomorphismSet aut = automorphism_group(h);
  CHECK(aut.order() == 72);
  NonlocalBox tilde = symmetrize(box, g, h, aut.perms);
  CHECK(verify_box(tilde).pass());
  CHECK(is_perfect(tilde, GameRule::isomorphism(g, h)));

  // 1/|V|, 1/2|E|, 1/2|E^c| on the g-question block.
  DistanceMatrix dg = all_pairs_distance(g);
  DistanceMatrix dh = all_pairs_distance(h);
  for (int ga = 0; ga < 6; ++ga)
    for (int gb = 0; gb < 6; ++gb)
      for (int ha = 0; ha < 6; ++ha)
        for (int hb = 0; hb < 6; ++hb) {
          Rat v = tilde.p(ga, gb, 6 + ha, 6 + hb);
          int rel_g = ga == gb ? 0 : (dg.at(ga, gb) == 1 ? 1 : 2);
          int rel_h = ha == hb ? 0 : (dh.at(ha, hb) == 1 ? 1 : 2);
          if (rel_g != rel_h) {
            CHECK(v == 0);
          } else if (rel_g == 0) {
            CHECK(v == rat(1, 6));
          } else if (rel_g == 1) {
            CHECK(v == rat(1, 12));
          } else {
            CHECK(v == rat(1, 18));
          }
        }
}
