#include "ngg/strategy.hpp"

#include <algorithm>
#include <numeric>

#include "ngg/game.hpp"
#include "ngg/limits.hpp"

namespace ngg {

NonlocalBox strategy_from_partition(const PairedPartition& p, const Graph& g,
                                    const Graph& h, int d_max) {
  if (p.d_max != d_max)
    throw std::invalid_argument("partition was built for a different distance bound");
  if (g.n + h.n > box_vertex_limit())
    throw SizeLimitError("strategy box beyond the desk-scale vertex limit");
  int total = g.n + h.n;
  std::vector<int> labels(total);
  std::iota(labels.begin(), labels.end(), 0);

  std::vector<int> cell_of_g(g.n, -1), cell_of_h(h.n, -1);
  for (int i = 0; i < p.k; ++i) {
    for (int v : p.cells_g[i]) cell_of_g[v] = i;
    for (int v : p.cells_h[i]) cell_of_h[v] = i;
  }
  if (std::count(cell_of_g.begin(), cell_of_g.end(), -1) ||
      std::count(cell_of_h.begin(), cell_of_h.end(), -1))
    throw std::invalid_argument("partition does not cover the given graphs");

  DistanceMatrix dg = all_pairs_distance(g);
  DistanceMatrix dh = all_pairs_distance(h);

  auto core = [&](int ga, int gb, int ha, int hb) -> Rat {
    int i = cell_of_g[ga], j = cell_of_g[gb];
    if (cell_of_h[ha] != i || cell_of_h[hb] != j) return 0;
    Dist dgg = dg.at(ga, gb), dhh = dh.at(ha, hb);
    if (dgg <= d_max) {
      if (!(dhh == dgg.value())) return 0;
      return rat(1, static_cast<long>(p.sizes[i]) * p.c[dgg.value()][i][j]);
    }
    if (dhh <= d_max) return 0;
    return rat(1, static_cast<long>(p.sizes[i]) * p.cbar[i][j]);
  };

  NonlocalBox box(labels, labels, labels, labels);
  for (int xa = 0; xa < total; ++xa)
    for (int xb = 0; xb < total; ++xb)
      for (int ya = 0; ya < total; ++ya)
        for (int yb = 0; yb < total; ++yb) {
          bool xa_g = xa < g.n, ya_g = ya < g.n;
          bool xb_g = xb < g.n, yb_g = yb < g.n;
          if (xa_g == ya_g || xb_g == yb_g) continue;  // stays zero
          int ga = xa_g ? xa : ya, ha = (xa_g ? ya : xa) - g.n;
          int gb = xb_g ? xb : yb, hb = (xb_g ? yb : xb) - g.n;
          Rat v = core(ga, gb, ha, hb);
          if (v != 0) box.at(xa, xb, ya, yb) = std::move(v);
        }
  return box;
}

NonlocalBox coloring_strategy(int m, int n_colors) {
  if (m < 2 || n_colors < 2)
    throw std::invalid_argument("coloring strategy needs m, n >= 2");
  std::vector<int> questions(m), colors(n_colors);
  std::iota(questions.begin(), questions.end(), 0);
  std::iota(colors.begin(), colors.end(), 0);
  NonlocalBox box(questions, questions, colors, colors);
  Rat same = rat(1, n_colors);
  Rat diff = rat(1, static_cast<long>(n_colors) * (n_colors - 1));
  for (int ga = 0; ga < m; ++ga)
    for (int gb = 0; gb < m; ++gb)
      for (int ha = 0; ha < n_colors; ++ha)
        for (int hb = 0; hb < n_colors; ++hb) {
          if (ga == gb && ha == hb) box.at(ga, gb, ha, hb) = same;
          if (ga != gb && ha != hb) box.at(ga, gb, ha, hb) = diff;
        }
  return box;
}

std::optional<SymmetricProfile> symmetric_profile(const NonlocalBox& b, const Graph& g,
                                                  const Graph& h,
                                                  const std::vector<int>& h1,
                                                  const std::vector<int>& h2) {
  try {
    validate_component_split(h, h1, h2);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  GameRule iso = GameRule::isomorphism(g, h);
  if (b.in_a != iso.questions_a() || b.in_b != iso.questions_b() ||
      b.out_a != iso.answers_a() || b.out_b != iso.answers_b())
    return std::nullopt;
  if (!is_perfect(b, iso)) return std::nullopt;

  std::vector<int> side(h.n);  // 1 or 2
  for (int v : h1) side[v] = 1;
  for (int v : h2) side[v] = 2;

  SymmetricProfile prof;
  prof.h1 = h1;
  prof.h2 = h2;
  bool have_eta = false;
  for (int ga = 0; ga < g.n; ++ga)
    for (int gb = 0; gb < g.n; ++gb) {
      Rat p12 = 0, p21 = 0, p11 = 0;
      for (int ha = 0; ha < h.n; ++ha)
        for (int hb = 0; hb < h.n; ++hb) {
          const Rat& v = b.at(ga, gb, g.n + ha, g.n + hb);
          if (v == 0) continue;
          if (side[ha] == 1 && side[hb] == 2) p12 += v;
          if (side[ha] == 2 && side[hb] == 1) p21 += v;
          if (side[ha] == 1 && side[hb] == 1) p11 += v;
        }
      if (p12 != p21) return std::nullopt;
      Rat eta_here = p11 + p12;
      if (!have_eta) {
        prof.eta = eta_here;
        have_eta = true;
      } else if (eta_here != prof.eta) {
        return std::nullopt;
      }
      prof.nu[{ga, gb}] = p12;
    }
  return prof;
}

NonlocalBox symmetrize(const NonlocalBox& b, const Graph& g, const Graph& h,
                       const std::vector<std::vector<int>>& autos) {
  if (autos.empty()) throw std::invalid_argument("empty automorphism set");
  int total = g.n + h.n;
  if (b.in_a.size() != static_cast<std::size_t>(total))
    throw std::invalid_argument("box is not over the joined vertex set");
  for (const auto& phi : autos) {
    if (static_cast<int>(phi.size()) != h.n)
      throw std::invalid_argument("permutation size does not match |V(h)|");
    std::vector<int> seen(h.n, 0);
    for (int v : phi) {
      if (v < 0 || v >= h.n || seen[v]++)
        throw std::invalid_argument("not a permutation of V(h)");
    }
    for (int u = 0; u < h.n; ++u)
      for (int v = u + 1; v < h.n; ++v)
        if (h.adjacent(u, v) != h.adjacent(phi[u], phi[v]))
          throw std::invalid_argument("set contains a non-automorphism of h");
  }
  // Deterministic averaging order.
  std::vector<std::vector<int>> s = autos;
  std::sort(s.begin(), s.end());

  // The shared automorphism relabels the h block coherently on both the
  // question and the answer side (questions in V(g) are untouched, so on
  // g-side question pairs this is plain answer averaging). Relabeling only
  // the answers would break the correlation with h-side questions.
  NonlocalBox out(b.in_a, b.in_b, b.out_a, b.out_b);
  Rat weight = rat(1, static_cast<long>(s.size()));
  int nx = static_cast<int>(b.in_a.size()), ny = static_cast<int>(b.in_b.size());
  int na = static_cast<int>(b.out_a.size()), nb = static_cast<int>(b.out_b.size());
  for (const auto& phi : s) {
    std::vector<int> act(total);
    for (int v = 0; v < g.n; ++v) act[v] = v;
    for (int v = 0; v < h.n; ++v) act[g.n + v] = g.n + phi[v];
    for (int ix = 0; ix < nx; ++ix)
      for (int iy = 0; iy < ny; ++iy)
        for (int ia = 0; ia < na; ++ia)
          for (int ib = 0; ib < nb; ++ib) {
            const Rat& v = b.at(ix, iy, ia, ib);
            if (v == 0) continue;
            out.at(out.index_in_a(act[b.in_a[ix]]), out.index_in_b(act[b.in_b[iy]]),
                   out.index_out_a(act[b.out_a[ia]]),
                   out.index_out_b(act[b.out_b[ib]])) += weight * v;
          }
  }
  return out;
}

}  // namespace ngg
