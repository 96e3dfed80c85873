#include "ngg/collapse.hpp"

#include <algorithm>

#include "ngg/game.hpp"
#include "ngg/partition.hpp"

namespace ngg {

namespace {

// Collapses a strategy box to binary inputs/outputs: questions are chosen
// by the four wiring labels, answers are mapped through per-label bits.
NonlocalBox wire_to_bits(const NonlocalBox& strategy, int x0, int x1, int y0, int y1,
                         const std::vector<int>& bit_of_a, const std::vector<int>& bit_of_b) {
  NonlocalBox out({0, 1}, {0, 1}, {0, 1}, {0, 1});
  int ix[2] = {strategy.index_in_a(x0), strategy.index_in_a(x1)};
  int iy[2] = {strategy.index_in_b(y0), strategy.index_in_b(y1)};
  int na = static_cast<int>(strategy.out_a.size());
  int nb = static_cast<int>(strategy.out_b.size());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
          const Rat& v = strategy.at(ix[x], iy[y], a, b);
          if (v != 0) out.at(x, y, bit_of_a[a], bit_of_b[b]) += v;
        }
  return out;
}

// Component bit of each answer label of the joined vertex set: vertices of
// h take the bit of their split half, everything else (including answers
// that illegally land in V(g)) maps to 0.
std::vector<int> component_bits(const std::vector<int>& answer_labels, int g_n,
                                const std::vector<int>& h2) {
  std::vector<int> bits(answer_labels.size(), 0);
  for (std::size_t i = 0; i < answer_labels.size(); ++i) {
    int label = answer_labels[i];
    if (label >= g_n &&
        std::find(h2.begin(), h2.end(), label - g_n) != h2.end())
      bits[i] = 1;
  }
  return bits;
}

void require_joined_signature(const NonlocalBox& strategy, const Graph& g, const Graph& h) {
  if (strategy.in_a.size() != static_cast<std::size_t>(g.n + h.n) ||
      strategy.in_a != strategy.out_a || strategy.in_b != strategy.out_b ||
      strategy.in_a != strategy.in_b)
    throw std::invalid_argument("strategy box is not over the joined vertex set");
}

}  // namespace

std::optional<std::array<int, 3>> first_induced_path(const Graph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (a != b && b != c && a != c && g.adjacent(a, b) && g.adjacent(b, c) &&
            !g.adjacent(a, c))
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

NonlocalBox derive_box_isomorphism_protocol(const NonlocalBox& strategy, const Graph& g,
                                            const Graph& h, const std::array<int, 3>& path,
                                            const std::vector<int>& h1,
                                            const std::vector<int>& h2,
                                            ProtocolWiring* wiring) {
  require_joined_signature(strategy, g, h);
  auto [g1, g2, g3] = path;
  if (g1 < 0 || g1 >= g.n || g2 < 0 || g2 >= g.n || g3 < 0 || g3 >= g.n)
    throw std::invalid_argument("path vertex out of range");
  if (!g.adjacent(g1, g2) || !g.adjacent(g2, g3) || g1 == g3 || g.adjacent(g1, g3))
    throw std::invalid_argument("path must be g1 ~ g2 ~ g3 with g1, g3 non-adjacent");
  validate_component_split(h, h1, h2);

  std::vector<int> bits_a = component_bits(strategy.out_a, g.n, h2);
  std::vector<int> bits_b = component_bits(strategy.out_b, g.n, h2);
  if (wiring) *wiring = {"isomorphism", g2, g1, g2, g3, h1, h2};
  return wire_to_bits(strategy, g2, g1, g2, g3, bits_a, bits_b);
}

NonlocalBox derive_box_coloring_protocol(const NonlocalBox& strategy,
                                         ProtocolWiring* wiring) {
  std::vector<int> k3{0, 1, 2}, bits{0, 1};
  if (strategy.in_a != k3 || strategy.in_b != k3 || strategy.out_a != bits ||
      strategy.out_b != bits)
    throw std::invalid_argument(
        "coloring protocol expects a box over V(K3) questions and 2-color answers");
  std::vector<int> identity{0, 1}, flipped{1, 0};
  if (wiring) *wiring = {"coloring", 0, 1, 2, 1, {}, {}};
  return wire_to_bits(strategy, /*x0=*/0, /*x1=*/1, /*y0=*/2, /*y1=*/1, identity, flipped);
}

NonlocalBox derive_box_combined_protocol(const NonlocalBox& iso_strategy,
                                         const NonlocalBox& coloring_box, const Graph& g,
                                         const Graph& h, ProtocolWiring* wiring) {
  require_joined_signature(iso_strategy, g, h);
  auto comps = components_and_diameter(h).components;
  int n_comp = static_cast<int>(comps.size());
  if (n_comp < 2) throw std::invalid_argument("h must be disconnected");
  for (const auto& comp : comps)
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!h.adjacent(comp[i], comp[j]))
          throw std::invalid_argument("every component of h must be complete");
  std::vector<int> comp_questions(n_comp);
  for (int i = 0; i < n_comp; ++i) comp_questions[i] = i;
  if (coloring_box.in_a != comp_questions || coloring_box.in_b != comp_questions ||
      coloring_box.out_a != std::vector<int>{0, 1} ||
      coloring_box.out_b != std::vector<int>{0, 1})
    throw std::invalid_argument("coloring box must be over K_N questions and 2 colors");

  auto path = first_induced_path(g);
  if (!path) throw std::invalid_argument("g has no induced 2-path (diam < 2)");
  auto [g1, g2, g3] = *path;

  std::vector<int> comp_of(h.n);
  for (int i = 0; i < n_comp; ++i)
    for (int v : comps[i]) comp_of[v] = i;
  int total = g.n + h.n;
  auto comp_of_label = [&](int label) { return label < g.n ? 0 : comp_of[label - g.n]; };

  NonlocalBox out({0, 1}, {0, 1}, {0, 1}, {0, 1});
  int qx[2] = {iso_strategy.index_in_a(g2), iso_strategy.index_in_a(g1)};
  int qy[2] = {iso_strategy.index_in_b(g2), iso_strategy.index_in_b(g3)};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int ya = 0; ya < total; ++ya)
        for (int yb = 0; yb < total; ++yb) {
          const Rat& w = iso_strategy.at(qx[x], qy[y], ya, yb);
          if (w == 0) continue;
          int ia = comp_of_label(iso_strategy.out_a[ya]);
          int ib = comp_of_label(iso_strategy.out_b[yb]);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              const Rat& c = coloring_box.at(ia, ib, a, b);
              if (c != 0) out.at(x, y, a, b) += w * c;
            }
        }
  if (wiring) {
    *wiring = {"combined", g2, g1, g2, g3, comps[0], {}};
    for (int i = 1; i < n_comp; ++i)
      wiring->h2.insert(wiring->h2.end(), comps[i].begin(), comps[i].end());
  }
  return out;
}

NonlocalBox derive_box_d_distance_protocol(const NonlocalBox& strategy, const Graph& g,
                                           const Graph& h, int d_max,
                                           ProtocolWiring* wiring) {
  require_joined_signature(strategy, g, h);
  auto info_h = components_and_diameter(h);
  if (info_h.components.size() != 2)
    throw std::invalid_argument("h must have exactly two connected components");
  int diam_h = info_h.diameter;
  int diam_g = components_and_diameter(g).diameter;
  if (!(d_max >= 1 && diam_h >= d_max && diam_g > diam_h))
    throw std::invalid_argument("need diam(g) > diam(h) >= d_max >= 1");

  // Endpoints at distance diam(h) + 1, midpoint at distance d_max from g1
  // on a shortest path; all chosen lexicographically.
  DistanceMatrix dm = all_pairs_distance(g);
  int g1 = -1, g2 = -1, g3 = -1;
  for (int a = 0; a < g.n && g1 < 0; ++a)
    for (int b = 0; b < g.n && g1 < 0; ++b)
      if (dm.at(a, b) == diam_h + 1) {
        for (int w = 0; w < g.n; ++w)
          if (dm.at(a, w) == d_max && dm.at(w, b) == diam_h + 1 - d_max) {
            g1 = a;
            g3 = b;
            g2 = w;
            break;
          }
      }
  if (g1 < 0) throw std::invalid_argument("no qualifying vertex triple in g");

  std::vector<int> bits_a = component_bits(strategy.out_a, g.n, info_h.components[1]);
  std::vector<int> bits_b = component_bits(strategy.out_b, g.n, info_h.components[1]);
  if (wiring)
    *wiring = {"d_distance", g2, g1,    g2,
               g3,           info_h.components[0], info_h.components[1]};
  return wire_to_bits(strategy, g2, g1, g2, g3, bits_a, bits_b);
}

CorrelationTable correlation_table(const NonlocalBox& b) {
  std::vector<int> bits{0, 1};
  if (b.in_a != bits || b.in_b != bits || b.out_a != bits || b.out_b != bits)
    throw std::invalid_argument("correlation table needs a binary box");
  CorrelationTable t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) t.m[2 * x + y][2 * a + bb] = b.at(x, y, a, bb);
  return t;
}

bool exceeds_collapse_threshold(const Rat& p) {
  Rat s = 6 * p - 3;
  return s > 0 && s * s > 6;
}

BoxAnalysis analyze_box(const NonlocalBox& b) {
  BoxAnalysis an;
  an.table = correlation_table(b);

  // Membership in the PR_{alpha,beta} family is an exact fit: the first
  // three rows are (alpha/2 + beta, 0, 0, ...), the last row splits the
  // anti-correlated mass evenly.
  const auto& m = an.table.m;
  Rat alpha = 2 * m[3][1];
  Rat beta = m[3][0];
  bool fits = m[3][1] == m[3][2] && alpha >= 0 && beta >= 0 && alpha + beta <= 1;
  for (int row = 0; row < 3 && fits; ++row)
    fits = m[row][0] == alpha / 2 + beta && m[row][1] == 0 && m[row][2] == 0 &&
           m[row][3] == 1 - alpha / 2 - beta;
  if (fits && m[3][3] != 1 - alpha - beta) fits = false;
  if (fits) an.pr_ab = {alpha, beta};

  WinningProbability wp = winning_probability(b, GameRule::chsh());
  an.chsh_worst = wp.worst_case;
  an.chsh_avg = wp.uniform_average;

  if (an.pr_ab && an.pr_ab->first == 1 && an.pr_ab->second == 0) {
    an.verdict = "collapse";
    an.criterion = "box is exactly PR";
  } else if (an.pr_ab && an.pr_ab->first > 0) {
    an.verdict = "collapse";
    an.criterion = "box is PR_{alpha,beta} with alpha > 0";
  } else if (exceeds_collapse_threshold(an.chsh_worst)) {
    an.verdict = "collapse";
    an.criterion = "worst-case CHSH value exceeds (3+sqrt(6))/6";
  } else {
    an.verdict = "inconclusive";
    an.criterion = "no collapse criterion fired";
  }
  return an;
}

}  // namespace ngg
