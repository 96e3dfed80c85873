#include "ngg/game.hpp"

#include <numeric>
#include <stdexcept>

namespace ngg {

namespace {

std::vector<int> iota_labels(int count, int start = 0) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

// Distance clamped to the window observable by the d-distance rule:
// 0..d_max kept exactly, everything beyond (including infinity) collapses
// to the single bucket d_max + 1.
int clamp_distance(Dist d, int d_max) {
  return (d <= d_max) ? d.value() : d_max + 1;
}

// 0 = equal, 1 = adjacent, 2 = neither (distinct non-adjacent, any distance).
int relation_from(const DistanceMatrix& d, int u, int v) {
  if (u == v) return 0;
  return d.at(u, v) == 1 ? 1 : 2;
}

}  // namespace

GameRule GameRule::chsh() {
  GameRule r;
  r.kind_ = Kind::chsh;
  r.questions_a_ = r.questions_b_ = r.answers_a_ = r.answers_b_ = {0, 1};
  r.description_ = "chsh";
  return r;
}

GameRule GameRule::isomorphism(const Graph& g, const Graph& h) {
  GameRule r;
  r.kind_ = Kind::isomorphism;
  r.offset_ = g.n;
  r.total_ = g.n + h.n;
  r.dist_g_ = all_pairs_distance(g);
  r.dist_h_ = all_pairs_distance(h);
  r.questions_a_ = r.questions_b_ = r.answers_a_ = r.answers_b_ = iota_labels(r.total_);
  r.description_ = "isomorphism(|G|=" + std::to_string(g.n) + ",|H|=" + std::to_string(h.n) + ")";
  return r;
}

GameRule GameRule::homomorphism(const Graph& g, const Graph& h) {
  GameRule r;
  r.kind_ = Kind::homomorphism;
  r.offset_ = g.n;
  r.total_ = g.n + h.n;
  r.dist_g_ = all_pairs_distance(g);
  r.dist_h_ = all_pairs_distance(h);
  r.questions_a_ = r.questions_b_ = iota_labels(g.n);
  r.answers_a_ = r.answers_b_ = iota_labels(h.n);
  r.description_ = "homomorphism(|G|=" + std::to_string(g.n) + ",|H|=" + std::to_string(h.n) + ")";
  return r;
}

GameRule GameRule::coloring(const Graph& g, int n_colors) {
  if (n_colors < 1) throw std::invalid_argument("coloring needs at least one color");
  GameRule r = homomorphism(g, complete_graph(n_colors));
  r.kind_ = Kind::coloring;
  r.description_ = "coloring(|G|=" + std::to_string(g.n) + ",N=" + std::to_string(n_colors) + ")";
  return r;
}

GameRule GameRule::d_distance(const Graph& g, const Graph& h, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  GameRule r;
  r.kind_ = Kind::d_distance;
  r.d_max_ = d_max;
  r.offset_ = g.n;
  r.total_ = g.n + h.n;
  r.dist_g_ = all_pairs_distance(g);
  r.dist_h_ = all_pairs_distance(h);
  r.questions_a_ = r.questions_b_ = r.answers_a_ = r.answers_b_ = iota_labels(r.total_);
  r.description_ = "d_distance(|G|=" + std::to_string(g.n) + ",|H|=" + std::to_string(h.n) +
                   ",D=" + std::to_string(d_max) + ")";
  return r;
}

bool GameRule::win(int qa, int qb, int ra, int rb) const {
  switch (kind_) {
    case Kind::chsh:
      return ((ra ^ rb) & 1) == (qa & qb & 1);

    case Kind::homomorphism:
    case Kind::coloring: {
      bool ok_equal = (qa != qb) || (ra == rb);
      bool ok_edge = !(dist_g_.at(qa, qb) == 1) || (dist_h_.at(ra, rb) == 1);
      return ok_equal && ok_edge;
    }

    case Kind::isomorphism:
    case Kind::d_distance: {
      // Each side must pair one vertex of g with one of h.
      bool qa_in_g = qa < offset_, ra_in_g = ra < offset_;
      bool qb_in_g = qb < offset_, rb_in_g = rb < offset_;
      if (qa_in_g == ra_in_g || qb_in_g == rb_in_g) return false;
      int ga = qa_in_g ? qa : ra, ha = (qa_in_g ? ra : qa) - offset_;
      int gb = qb_in_g ? qb : rb, hb = (qb_in_g ? rb : qb) - offset_;
      if (kind_ == Kind::isomorphism) {
        int rel_g = relation_from(dist_g_, ga, gb);
        int rel_h = relation_from(dist_h_, ha, hb);
        return rel_g == rel_h;
      }
      return clamp_distance(dist_g_.at(ga, gb), d_max_) ==
             clamp_distance(dist_h_.at(ha, hb), d_max_);
    }
  }
  return false;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

GameRule GameRule::parse(const std::string& descriptor) {
  if (descriptor == "chsh") return chsh();
  auto open = descriptor.find('(');
  if (open == std::string::npos || descriptor.back() != ')')
    throw ParseError("malformed rule descriptor: " + descriptor);
  std::string name = descriptor.substr(0, open);
  auto args = split_args(descriptor.substr(open + 1, descriptor.size() - open - 2));
  auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw ParseError("rule " + name + " takes " + std::to_string(want) + " arguments");
  };
  if (name == "isomorphism") {
    arity(2);
    return isomorphism(parse_graph_spec(args[0]), parse_graph_spec(args[1]));
  }
  if (name == "homomorphism") {
    arity(2);
    return homomorphism(parse_graph_spec(args[0]), parse_graph_spec(args[1]));
  }
  if (name == "coloring") {
    arity(2);
    return coloring(parse_graph_spec(args[0]), std::stoi(args[1]));
  }
  if (name == "d_distance") {
    arity(3);
    return d_distance(parse_graph_spec(args[0]), parse_graph_spec(args[1]),
                      std::stoi(args[2]));
  }
  throw ParseError("unknown rule kind: " + name);
}

WinningProbability winning_probability(const NonlocalBox& b, const GameRule& r) {
  if (b.in_a != r.questions_a() || b.in_b != r.questions_b() ||
      b.out_a != r.answers_a() || b.out_b != r.answers_b())
    throw std::invalid_argument("box signature does not match the game rule");
  int nq_a = static_cast<int>(b.in_a.size()), nq_b = static_cast<int>(b.in_b.size());
  int na_a = static_cast<int>(b.out_a.size()), na_b = static_cast<int>(b.out_b.size());

  WinningProbability wp{Rat(1), Rat(0)};
  bool first = true;
  for (int x = 0; x < nq_a; ++x)
    for (int y = 0; y < nq_b; ++y) {
      Rat s = 0;
      for (int a = 0; a < na_a; ++a)
        for (int bb = 0; bb < na_b; ++bb)
          if (r.win(b.in_a[x], b.in_b[y], b.out_a[a], b.out_b[bb]))
            s += b.at(x, y, a, bb);
      if (first || s < wp.worst_case) wp.worst_case = s;
      first = false;
      wp.uniform_average += s;
    }
  wp.uniform_average /= static_cast<long>(nq_a) * nq_b;
  return wp;
}

bool is_perfect(const NonlocalBox& b, const GameRule& r) {
  return winning_probability(b, r).worst_case == 1;
}

}  // namespace ngg
