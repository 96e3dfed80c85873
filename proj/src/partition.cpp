#include "ngg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ngg {

Partition coarsest_d_equitable(const Graph& g, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  DistanceMatrix dm = all_pairs_distance(g);
  std::vector<int> color(g.n, 0);
  int k = 1;

  for (;;) {
    // Signature of v: its color, then for each t = 1..d_max the vector of
    // distance-t neighbor counts per color.
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      auto& s = sig[v];
      s.reserve(1 + static_cast<std::size_t>(d_max) * k);
      s.push_back(color[v]);
      for (int t = 1; t <= d_max; ++t) {
        std::vector<int> counts(k, 0);
        for (int u = 0; u < g.n; ++u)
          if (dm.at(v, u) == t) ++counts[color[u]];
        s.insert(s.end(), counts.begin(), counts.end());
      }
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [_, r] : rank) r = next++;
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
      int nc = rank[sig[v]];
      if (nc != color[v]) changed = true;
      color[v] = nc;
    }
    k = next;
    if (!changed) break;
  }

  Partition p;
  p.cell_of = color;
  p.cells.assign(k, {});
  for (int v = 0; v < g.n; ++v) p.cells[color[v]].push_back(v);
  return p;
}

namespace {

void validate_cells_cover(const Graph& g, const std::vector<std::vector<int>>& cells,
                          const char* which) {
  std::vector<int> seen(g.n, 0);
  for (const auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument(std::string(which) + ": empty cell");
    for (int v : cell) {
      if (v < 0 || v >= g.n)
        throw std::invalid_argument(std::string(which) + ": vertex out of range");
      if (seen[v]++) throw std::invalid_argument(std::string(which) + ": cells overlap");
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (!seen[v]) throw std::invalid_argument(std::string(which) + ": cells do not cover V");
}

}  // namespace

PairedPartition make_paired_partition(const Graph& g, const Graph& h,
                                      std::vector<std::vector<int>> cells_g,
                                      std::vector<std::vector<int>> cells_h, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  if (cells_g.size() != cells_h.size())
    throw std::invalid_argument("cell counts differ between the two graphs");
  validate_cells_cover(g, cells_g, "cells_g");
  validate_cells_cover(h, cells_h, "cells_h");
  for (auto& cell : cells_g) std::sort(cell.begin(), cell.end());
  for (auto& cell : cells_h) std::sort(cell.begin(), cell.end());

  PairedPartition p;
  p.k = static_cast<int>(cells_g.size());
  p.d_max = d_max;
  p.cells_g = std::move(cells_g);
  p.cells_h = std::move(cells_h);
  for (int i = 0; i < p.k; ++i) {
    if (p.cells_g[i].size() != p.cells_h[i].size())
      throw std::invalid_argument("matched cells have different sizes");
    p.sizes.push_back(static_cast<int>(p.cells_g[i].size()));
  }

  DistanceMatrix dg = all_pairs_distance(g);
  DistanceMatrix dh = all_pairs_distance(h);
  std::vector<int> cell_of_g(g.n), cell_of_h(h.n);
  for (int i = 0; i < p.k; ++i) {
    for (int v : p.cells_g[i]) cell_of_g[v] = i;
    for (int v : p.cells_h[i]) cell_of_h[v] = i;
  }

  // The definitional check: every member of C_i and of D_i must see the
  // same number of cell-j vertices at each distance t <= d_max.
  p.c.assign(d_max + 1, std::vector<std::vector<int>>(p.k, std::vector<int>(p.k, 0)));
  for (int t = 0; t <= d_max; ++t) {
    for (int i = 0; i < p.k; ++i)
      for (int j = 0; j < p.k; ++j) {
        int expected = -1;
        auto tally = [&](const std::vector<int>& cell, const DistanceMatrix& dm,
                         const std::vector<int>& cell_of) {
          for (int v : cell) {
            int count = 0;
            for (int u = 0; u < dm.n; ++u)
              if (cell_of[u] == j && dm.at(v, u) == t) ++count;
            if (expected == -1) expected = count;
            if (count != expected)
              throw std::invalid_argument("cells are not a common equitable partition");
          }
        };
        tally(p.cells_g[i], dg, cell_of_g);
        tally(p.cells_h[i], dh, cell_of_h);
        p.c[t][i][j] = expected;
      }
  }
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.k; ++j)
      if (p.c[0][i][j] != (i == j ? 1 : 0))
        throw std::invalid_argument("distance-0 parameters are not the identity");

  p.cbar.assign(p.k, std::vector<int>(p.k, 0));
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.k; ++j) {
      int sum = 0;
      for (int t = 0; t <= d_max; ++t) sum += p.c[t][i][j];
      p.cbar[i][j] = p.sizes[j] - sum;
      if (p.cbar[i][j] < 0)
        throw std::invalid_argument("negative far-count parameter");
    }
  for (int t = 0; t <= d_max; ++t)
    for (int i = 0; i < p.k; ++i)
      for (int j = 0; j < p.k; ++j)
        if (static_cast<long>(p.sizes[i]) * p.c[t][i][j] !=
            static_cast<long>(p.sizes[j]) * p.c[t][j][i])
          throw std::invalid_argument("cell size / parameter relation violated");
  return p;
}

std::optional<PairedPartition> common_equitable_partition(const Graph& g, const Graph& h,
                                                          int d_max) {
  Graph u = disjoint_union(g, h);
  Partition joint = coarsest_d_equitable(u, d_max);

  std::vector<std::vector<int>> cells_g, cells_h;
  for (const auto& cell : joint.cells) {
    std::vector<int> cg, ch;
    for (int v : cell)
      (v < g.n ? cg : ch).push_back(v < g.n ? v : v - g.n);
    if (cg.size() != ch.size()) return std::nullopt;  // unbalanced cell
    cells_g.push_back(std::move(cg));
    cells_h.push_back(std::move(ch));
  }
  return make_paired_partition(g, h, std::move(cells_g), std::move(cells_h), d_max);
}

void validate_component_split(const Graph& h, const std::vector<int>& h1,
                              const std::vector<int>& h2) {
  if (h1.empty() || h2.empty())
    throw std::invalid_argument("component split: both parts must be nonempty");
  std::vector<int> side(h.n, -1);
  auto mark = [&](const std::vector<int>& part, int s) {
    for (int v : part) {
      if (v < 0 || v >= h.n)
        throw std::invalid_argument("component split: vertex out of range");
      if (side[v] != -1) throw std::invalid_argument("component split: parts overlap");
      side[v] = s;
    }
  };
  mark(h1, 0);
  mark(h2, 1);
  for (int v = 0; v < h.n; ++v)
    if (side[v] == -1)
      throw std::invalid_argument("component split: parts do not cover V(h)");
  for (const auto& comp : components_and_diameter(h).components) {
    for (int v : comp)
      if (side[v] != side[comp[0]])
        throw std::invalid_argument("component split cuts a connected component");
  }
}

bool check_condition_h(const PairedPartition& p, const Graph& h,
                       const std::vector<int>& h1, const std::vector<int>& h2) {
  validate_component_split(h, h1, h2);
  std::vector<int> in_h1(h.n, 0);
  for (int v : h1) in_h1[v] = 1;
  // |D_i cap H1| / n_i constant over i, compared exactly by cross-multiplying.
  long num0 = -1, den0 = -1;
  for (int i = 0; i < p.k; ++i) {
    long num = 0;
    for (int v : p.cells_h[i]) num += in_h1[v];
    long den = p.sizes[i];
    if (num0 < 0) {
      num0 = num;
      den0 = den;
    } else if (num * den0 != num0 * den) {
      return false;
    }
  }
  return true;
}

}  // namespace ngg
