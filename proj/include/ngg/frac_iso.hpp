#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngg/graph.hpp"
#include "ngg/matrix.hpp"
#include "ngg/partition.hpp"

namespace ngg {

// Doubly stochastic certificate: rows indexed by V(g), columns by V(h).
struct BistochasticWitness {
  RatMatrix u;
};

bool is_bistochastic(const RatMatrix& u);

// u[g][h] = 1/n_i on matched cells, 0 elsewhere.
BistochasticWitness witness_from_partition(const PairedPartition& p);

// True iff u is bistochastic and, for every t = 1..d_max and all g, h,
//   sum over h' at distance t of h of u[g][h']  ==  sum over g' at distance
//   t of g of u[g'][h]
// holds exactly (as matrices: A_g^(t) u = u A_h^(t)). Throws on dimension
// mismatch.
bool verify_witness(const BistochasticWitness& w, const Graph& g, const Graph& h,
                    int d_max);

struct FracIsoResult {
  bool isomorphic = false;
  std::optional<BistochasticWitness> witness;
  std::string reason;  // diagnostic: which rule decided
};

// Decides d-fractional isomorphism. Fast negatives on vertex-count mismatch
// and on the diameter obstruction (one graph realizes a distance t <= d_max
// the other cannot); otherwise decided via the common equitable partition,
// with every positive witness re-verified before being returned.
FracIsoResult is_d_fractionally_isomorphic(const Graph& g, const Graph& h, int d_max);

// The cycle pair C_{2(2d+1)} vs C_{2d+1} + C_{2d+1} together with the
// half-identity block witness u = 1/2 [[I, I], [I, I]]. The witness passes
// verify_witness for every t <= d and fails at t = d + 1.
struct CyclePair {
  Graph even_cycle;   // C_{2(2d+1)}
  Graph two_cycles;   // C_{2d+1} disjoint union C_{2d+1}
  BistochasticWitness witness;
};
CyclePair paired_cycle_family(int d);

// Exact graph isomorphism by backtracking with color-refinement pruning.
// Returns the lexicographically least adjacency-preserving bijection, or
// nullopt. Throws SizeLimitError beyond the desk-scale vertex limit.
std::optional<std::vector<int>> classical_isomorphism(const Graph& g, const Graph& h);

}  // namespace ngg
