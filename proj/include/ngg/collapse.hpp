#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ngg/box.hpp"
#include "ngg/graph.hpp"

namespace ngg {

// Local pre/post-processing that turns a game strategy into a binary box:
// bit -> question vertex on the way in, answer vertex -> component bit on
// the way out.
struct ProtocolWiring {
  std::string kind;
  int x0 = -1, x1 = -1;  // Alice's question for input bit 0 / 1
  int y0 = -1, y1 = -1;  // Bob's question for input bit 0 / 1
  std::vector<int> h1, h2;  // component split feeding the output bits
};

// Lexicographically first triple g1 ~ g2 ~ g3 with g1, g3 distinct and
// non-adjacent; exists iff some component of g has diameter >= 2.
std::optional<std::array<int, 3>> first_induced_path(const Graph& g);

// Wiring for a strategy of the isomorphism game: an induced path
// g1 ~ g2 ~ g3 (g1, g3 distinct non-adjacent) chooses the questions,
// the answer's component half chooses the bit. Answers outside V(h)
// map to bit 0. A perfect strategy yields exactly PR when both halves
// of h are single complete components.
NonlocalBox derive_box_isomorphism_protocol(const NonlocalBox& strategy, const Graph& g,
                                            const Graph& h, const std::array<int, 3>& path,
                                            const std::vector<int>& h1,
                                            const std::vector<int>& h2,
                                            ProtocolWiring* wiring = nullptr);

// Wiring for a strategy of the 2-coloring game of K3: questions v1/v2 and
// v3/v2, Alice outputs her color, Bob flips his. A perfect strategy yields
// exactly PR.
NonlocalBox derive_box_coloring_protocol(const NonlocalBox& strategy,
                                         ProtocolWiring* wiring = nullptr);

// Isomorphism-game wiring composed with a 2-coloring box of K_N, for h with
// exactly N complete components: the component index of each answer is fed
// through the coloring box to produce the bit. With worst-case winning
// probabilities p and q, the derived box wins CHSH with worst-case >= p*q.
NonlocalBox derive_box_combined_protocol(const NonlocalBox& iso_strategy,
                                         const NonlocalBox& coloring_box, const Graph& g,
                                         const Graph& h, ProtocolWiring* wiring = nullptr);

// Wiring for a strategy of the d-distance game, h with exactly two
// components and diam(g) > diam(h) >= d_max >= 1: questions are an endpoint
// pair at distance diam(h) + 1 and a midpoint at distance d_max from one
// end. A perfect strategy yields exactly PR when d_max = diam(h).
NonlocalBox derive_box_d_distance_protocol(const NonlocalBox& strategy, const Graph& g,
                                           const Graph& h, int d_max,
                                           ProtocolWiring* wiring = nullptr);

// 4x4 table of a binary box: rows are questions (x,y) in order
// 00, 01, 10, 11; columns are answers (a,b) in the same order.
struct CorrelationTable {
  std::array<std::array<Rat, 4>, 4> m;
};

CorrelationTable correlation_table(const NonlocalBox& b);

// Exact predicate p > (3 + sqrt 6)/6, evaluated as 6p - 3 > 0 and
// (6p - 3)^2 > 6; the irrational threshold is never materialized.
bool exceeds_collapse_threshold(const Rat& p);

struct BoxAnalysis {
  CorrelationTable table;
  std::optional<std::pair<Rat, Rat>> pr_ab;  // (alpha, beta) when in the family
  Rat chsh_worst;
  Rat chsh_avg;
  std::string verdict;    // "collapse" or "inconclusive"
  std::string criterion;  // which rule fired
};

// Decides collapse of communication complexity for a binary box:
// (a) the box is exactly PR, or (b) it is PR_{alpha,beta} with alpha > 0,
// or (c) its worst-case CHSH value exceeds (3 + sqrt 6)/6. Anything else is
// reported inconclusive, never "no collapse".
BoxAnalysis analyze_box(const NonlocalBox& b);

}  // namespace ngg
