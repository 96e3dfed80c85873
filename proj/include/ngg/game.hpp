#pragma once

#include <string>
#include <vector>

#include "ngg/box.hpp"
#include "ngg/graph.hpp"

namespace ngg {

// Deterministic win predicate over (questions, answers), total on every
// quadruple. For the isomorphism and distance games, questions and answers
// both range over V(g) joined with V(h), with h's vertices offset by |V(g)|.
class GameRule {
 public:
  enum class Kind { chsh, isomorphism, homomorphism, coloring, d_distance };

  static GameRule chsh();
  static GameRule isomorphism(const Graph& g, const Graph& h);
  static GameRule homomorphism(const Graph& g, const Graph& h);
  static GameRule coloring(const Graph& g, int n_colors);
  static GameRule d_distance(const Graph& g, const Graph& h, int d_max);

  // Parses descriptors like "chsh", "isomorphism(cycle:6,union(complete:3,
  // complete:3))", "coloring(complete:3,2)", "d_distance(g,h,D)".
  static GameRule parse(const std::string& descriptor);

  bool win(int qa, int qb, int ra, int rb) const;  // by label

  Kind kind() const { return kind_; }
  const std::vector<int>& questions_a() const { return questions_a_; }
  const std::vector<int>& questions_b() const { return questions_b_; }
  const std::vector<int>& answers_a() const { return answers_a_; }
  const std::vector<int>& answers_b() const { return answers_b_; }
  std::string describe() const { return description_; }

 private:
  GameRule() = default;

  Kind kind_ = Kind::chsh;
  int d_max_ = 0;       // d_distance only
  int offset_ = 0;      // first h label in the joined vertex set
  int total_ = 0;       // size of the joined vertex set
  DistanceMatrix dist_g_, dist_h_;
  std::vector<int> questions_a_, questions_b_, answers_a_, answers_b_;
  std::string description_;
};

struct WinningProbability {
  Rat worst_case;       // min over question pairs; the box is perfect iff 1
  Rat uniform_average;  // mean over question pairs
};

// Sums the box over winning answers for every question pair. Throws if the
// box's input/output label sets do not match the rule's questions/answers.
WinningProbability winning_probability(const NonlocalBox& b, const GameRule& r);

bool is_perfect(const NonlocalBox& b, const GameRule& r);

}  // namespace ngg
