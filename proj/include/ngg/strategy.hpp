#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ngg/box.hpp"
#include "ngg/graph.hpp"
#include "ngg/partition.hpp"

namespace ngg {

// The canonical perfect strategy of a d-common equitable partition, as a
// box over the joined vertex set (h offset by |V(g)|):
//   1/(n_i c[t][i][j])  when both sides sit in matched cells and both
//                       distances equal t <= d_max,
//   1/(n_i cbar[i][j])  when both distances exceed d_max,
//   0                   otherwise,
// extended to mixed question sides by the four-fold flip symmetry
// P(h,h'|g,g') = P(g,h'|h,g') = P(h,g'|g,h') = P(g,g'|h,h').
NonlocalBox strategy_from_partition(const PairedPartition& p, const Graph& g,
                                    const Graph& h, int d_max);

// Perfect strategy for the n_colors-coloring game of K_m: 1/N on equal
// answers to equal questions, 1/N(N-1) on distinct answers to distinct
// questions. Marginals are uniform 1/N.
NonlocalBox coloring_strategy(int m, int n_colors);

// Certificate that a box is a symmetric strategy with respect to a
// component split (h1, h2): eta is the constant with
// P(both answers in H1 | questions) = eta - nu[question pair], and
// nu[question pair] = P(answers split across H1/H2, either orientation).
struct SymmetricProfile {
  Rat eta;
  std::map<std::pair<int, int>, Rat> nu;  // keyed by (g_A, g_B)
  std::vector<int> h1, h2;
};

// Returns the profile iff the box is perfect for the isomorphism game of
// (g, h), the split is a valid component bipartition, and the defining
// equalities hold exactly for every question pair. Empty optional otherwise.
std::optional<SymmetricProfile> symmetric_profile(const NonlocalBox& b, const Graph& g,
                                                  const Graph& h,
                                                  const std::vector<int>& h1,
                                                  const std::vector<int>& h2);

// Averages the box over a set of automorphisms of h applied to the answer
// side (vertices of g are left fixed). Every permutation must be a genuine
// automorphism of h; the set need not be the full group.
NonlocalBox symmetrize(const NonlocalBox& b, const Graph& g, const Graph& h,
                       const std::vector<std::vector<int>>& autos);

}  // namespace ngg
