#include "ngg/frac_iso.hpp"

#include <algorithm>

#include "ngg/limits.hpp"

namespace ngg {

bool is_bistochastic(const RatMatrix& u) {
  if (u.rows() != u.cols()) return false;
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      if (u.at(i, j) < 0) return false;
  for (int i = 0; i < u.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < u.cols(); ++j) s += u.at(i, j);
    if (s != 1) return false;
  }
  for (int j = 0; j < u.cols(); ++j) {
    Rat s = 0;
    for (int i = 0; i < u.rows(); ++i) s += u.at(i, j);
    if (s != 1) return false;
  }
  return true;
}

BistochasticWitness witness_from_partition(const PairedPartition& p) {
  int n = 0;
  for (int s : p.sizes) n += s;
  RatMatrix u(n, n);
  for (int i = 0; i < p.k; ++i) {
    Rat v = rat(1, p.sizes[i]);
    for (int gv : p.cells_g[i])
      for (int hv : p.cells_h[i]) u.at(gv, hv) = v;
  }
  return {std::move(u)};
}

namespace {

RatMatrix to_rat(const ZeroOneMatrix& m) {
  RatMatrix r(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j)) r.at(i, j) = 1;
  return r;
}

}  // namespace

bool verify_witness(const BistochasticWitness& w, const Graph& g, const Graph& h,
                    int d_max) {
  if (w.u.rows() != g.n || w.u.cols() != h.n)
    throw std::invalid_argument("witness dimensions do not match the graphs");
  if (!is_bistochastic(w.u)) return false;
  DistanceMatrix dg = all_pairs_distance(g);
  DistanceMatrix dh = all_pairs_distance(h);
  for (int t = 1; t <= d_max; ++t) {
    RatMatrix ag = to_rat(d_adjacency(dg, t));
    RatMatrix ah = to_rat(d_adjacency(dh, t));
    if (ag * w.u != w.u * ah) return false;
  }
  return true;
}

FracIsoResult is_d_fractionally_isomorphic(const Graph& g, const Graph& h, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  FracIsoResult r;
  if (g.n != h.n) {
    r.reason = "vertex counts differ";
    return r;
  }
  int diam_g = components_and_diameter(g).diameter;
  int diam_h = components_and_diameter(h).diameter;
  // One graph realizes a distance t <= d_max that the other cannot: its
  // distance-t matrix is nonzero while the other's is zero, so no
  // bistochastic matrix can intertwine them. Applied symmetrically in g
  // and h; with unequal diameters the smallest such t is min(diam) + 1.
  if (diam_g != diam_h && d_max > std::min(diam_g, diam_h)) {
    r.reason =
        "diameter obstruction at t = " + std::to_string(std::min(diam_g, diam_h) + 1);
    return r;
  }
  auto cep = common_equitable_partition(g, h, d_max);
  if (!cep) {
    r.reason = "no common equitable partition";
    return r;
  }
  BistochasticWitness w = witness_from_partition(*cep);
  if (!verify_witness(w, g, h, d_max))
    throw std::logic_error("internal soundness failure: partition witness rejected");
  r.isomorphic = true;
  r.witness = std::move(w);
  r.reason = "common equitable partition with " + std::to_string(cep->k) + " cells";
  return r;
}

CyclePair paired_cycle_family(int d) {
  if (d < 1) throw std::invalid_argument("cycle family needs d >= 1");
  int n = 2 * d + 1;
  CyclePair cp;
  cp.even_cycle = cycle_graph(2 * n);
  cp.two_cycles = disjoint_union(cycle_graph(n), cycle_graph(n));
  RatMatrix u(2 * n, 2 * n);
  Rat half = rat(1, 2);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      if (i % n == j % n) u.at(i, j) = half;
  cp.witness = {std::move(u)};
  return cp;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& color_g,
                        const std::vector<int>& color_h, std::vector<int>& image,
                        std::vector<int>& used, int v) {
  if (v == g.n) return true;
  for (int w = 0; w < h.n; ++w) {
    if (used[w] || color_g[v] != color_h[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.adjacent(u, v) != h.adjacent(image[u], w)) ok = false;
    if (!ok) continue;
    image[v] = w;
    used[w] = 1;
    if (extend_isomorphism(g, h, color_g, color_h, image, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> classical_isomorphism(const Graph& g, const Graph& h) {
  int limit = automorphism_vertex_limit();
  if (g.n > limit || h.n > limit)
    throw SizeLimitError("classical isomorphism limited to " + std::to_string(limit) +
                         " vertices (set NGG_MAX_VERTICES to override)");
  if (g.n != h.n || g.edge_count() != h.edge_count()) return std::nullopt;

  // Joint color refinement; an isomorphism can only map within equal colors.
  Partition joint = coarsest_d_equitable(disjoint_union(g, h), 1);
  std::vector<int> color_g(g.n), color_h(h.n);
  for (int v = 0; v < g.n; ++v) color_g[v] = joint.cell_of[v];
  for (int v = 0; v < h.n; ++v) color_h[v] = joint.cell_of[g.n + v];
  {
    std::vector<int> hist_g(joint.size(), 0), hist_h(joint.size(), 0);
    for (int c : color_g) ++hist_g[c];
    for (int c : color_h) ++hist_h[c];
    if (hist_g != hist_h) return std::nullopt;
  }

  std::vector<int> image(g.n, -1), used(h.n, 0);
  if (!extend_isomorphism(g, h, color_g, color_h, image, used, 0)) return std::nullopt;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) != h.adjacent(image[u], image[v]))
        throw std::logic_error("internal error: candidate isomorphism fails re-check");
  return image;
}

}  // namespace ngg
