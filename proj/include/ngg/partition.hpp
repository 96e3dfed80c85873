#pragma once

#include <optional>
#include <vector>

#include "ngg/graph.hpp"

namespace ngg {

// Ordered partition of the vertices of one graph. Cell order is the
// lexicographic order of the refinement signatures, so it is independent
// of vertex labeling.
struct Partition {
  std::vector<std::vector<int>> cells;  // sorted within each cell
  std::vector<int> cell_of;
  int size() const { return static_cast<int>(cells.size()); }
};

// Coarsest partition in which, for every t = 1..d_max, the number of
// distance-t neighbors a vertex has in each cell is constant over its own
// cell. Computed by iterated signature refinement from the single-cell
// partition; cells only ever split, so this terminates in <= |V| rounds.
Partition coarsest_d_equitable(const Graph& g, int d_max);

// Matched cell systems (C_i, D_i) of a graph pair with common parameters.
// Invariants (validated on construction):
//   |C_i| = |D_i| = n_i,
//   c[0][i][j] = delta_ij,
//   n_i * c[t][i][j] = n_j * c[t][j][i],
//   cbar[i][j] = n_j - sum_t c[t][i][j],
//   every member of C_i (in g) and of D_i (in h) sees exactly c[t][i][j]
//   vertices of cell j at distance t, for all t <= d_max.
struct PairedPartition {
  int k = 0;
  int d_max = 0;
  std::vector<int> sizes;                        // n_i
  std::vector<std::vector<std::vector<int>>> c;  // c[t][i][j], t = 0..d_max
  std::vector<std::vector<int>> cbar;            // cbar[i][j]
  std::vector<std::vector<int>> cells_g;
  std::vector<std::vector<int>> cells_h;
};

// Builds a PairedPartition from explicitly matched cells, computing the
// common parameters and validating every invariant by direct counting.
// Throws std::invalid_argument if the cells are not a common d-equitable
// partition.
PairedPartition make_paired_partition(const Graph& g, const Graph& h,
                                      std::vector<std::vector<int>> cells_g,
                                      std::vector<std::vector<int>> cells_h, int d_max);

// Decides existence of a d-common equitable partition: refines the disjoint
// union to its coarsest d-equitable partition and accepts iff every stable
// cell holds equally many vertices of g and of h. Any common partition
// refines the coarsest one and balancedness survives coarsening, so this is
// exact, not a heuristic.
std::optional<PairedPartition> common_equitable_partition(const Graph& g, const Graph& h,
                                                          int d_max);

// True iff |D_i cap H1| / |D_i| is the same ratio for every cell i.
// h1/h2 must bipartition V(h) along whole connected components.
bool check_condition_h(const PairedPartition& p, const Graph& h,
                       const std::vector<int>& h1, const std::vector<int>& h2);

// Validates that (h1, h2) is a bipartition of V(h) into nonempty unions of
// connected components; throws std::invalid_argument otherwise.
void validate_component_split(const Graph& h, const std::vector<int>& h1,
                              const std::vector<int>& h2);

}  // namespace ngg
