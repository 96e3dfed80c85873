#pragma once

#include <optional>
#include <vector>

#include "ngg/graph.hpp"

namespace ngg {

// Full automorphism group of a small graph, every element verified to
// preserve adjacency both ways, sorted lexicographically. Contains the
// identity and is closed under composition and inverse by construction.
struct AutomorphismSet {
  std::vector<std::vector<int>> perms;
  long order() const { return static_cast<long>(perms.size()); }
};

// Exhaustive backtracking with color-refinement pruning. Throws
// SizeLimitError beyond the desk-scale vertex limit.
AutomorphismSet automorphism_group(const Graph& g);

// Transitivity flags, all decided by direct orbit checks on the full group.
// Edge transitivity follows the ordered-pair reading (an automorphism maps
// any ordered adjacent pair onto any other); distance transitivity
// quantifies over finite distances only.
struct TransitivityProfile {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool distance_transitive = false;
  bool strongly_transitive = false;
  std::optional<long> d1, d2, d3;
};

TransitivityProfile transitivity_profile(const Graph& g);

// Witness of strong transitivity with S = Aut(g): every ordered vertex pair
// is realized by exactly d1 automorphisms, every ordered adjacent pair by
// exactly d2, every ordered non-adjacent distinct pair by exactly d3.
// Conditions on an empty pair class are vacuous and leave the constant
// unset (complete and edgeless graphs). characterization_agrees records
// whether "distance-transitive and diameter <= 2" reaches the same verdict.
struct StrongTransitivityCert {
  AutomorphismSet s;
  std::optional<long> d1, d2, d3;
  bool characterization_agrees = false;
};

std::optional<StrongTransitivityCert> strong_transitivity(const Graph& g);

}  // namespace ngg
