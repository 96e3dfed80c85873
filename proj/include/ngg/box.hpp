#pragma once

#include <string>
#include <vector>

#include "ngg/rational.hpp"

namespace ngg {

// Conditional distribution P(a,b|x,y) over finite labeled input/output
// sets. Immutable by convention once built; evaluation never mutates.
struct NonlocalBox {
  std::vector<int> in_a, in_b, out_a, out_b;  // label lists
  std::vector<Rat> table;                     // [x][y][a][b], indices into the lists

  NonlocalBox() = default;
  NonlocalBox(std::vector<int> in_a, std::vector<int> in_b, std::vector<int> out_a,
              std::vector<int> out_b);

  Rat& at(int ix, int iy, int ia, int ib);
  const Rat& at(int ix, int iy, int ia, int ib) const;

  int index_in_a(int label) const;
  int index_in_b(int label) const;
  int index_out_a(int label) const;
  int index_out_b(int label) const;

  // Entry addressed by labels rather than indices.
  const Rat& p(int x, int y, int a, int b) const;
  Rat& p(int x, int y, int a, int b);

  friend bool operator==(const NonlocalBox& a, const NonlocalBox& b) {
    return a.in_a == b.in_a && a.in_b == b.in_b && a.out_a == b.out_a &&
           a.out_b == b.out_b && a.table == b.table;
  }
};

// Binary boxes from the standard menu.
NonlocalBox box_p0();  // always outputs (0,0)
NonlocalBox box_p1();  // always outputs (1,1)
NonlocalBox box_sr();  // (P0 + P1)/2
NonlocalBox box_pr();  // 1/2 when a xor b = x and y

// alpha PR + beta P0 + (1 - alpha - beta) P1; needs alpha, beta >= 0 and
// alpha + beta <= 1.
NonlocalBox box_pr_alpha_beta(const Rat& alpha, const Rat& beta);

// Name-based constructor: P0 | P1 | SR | PR | PR_ab (the last takes the
// two parameters). Used by the CLI and JSON layers.
NonlocalBox canonical_box(const std::string& name, const Rat& alpha = 0,
                          const Rat& beta = 0);

// Convex combination of same-signature boxes; weights must be nonnegative
// and sum to 1.
NonlocalBox mix_boxes(const std::vector<std::pair<Rat, const NonlocalBox*>>& terms);

struct BoxReport {
  bool nonnegative = true;
  bool normalized = true;
  bool ns_alice = true;  // Alice's marginal independent of Bob's input
  bool ns_bob = true;
  std::string first_violation;
  bool pass() const { return nonnegative && normalized && ns_alice && ns_bob; }
};

BoxReport verify_box(const NonlocalBox& b);

}  // namespace ngg
