#include "ngg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

namespace ngg {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> ce;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adjacent(u, v)) ce.emplace_back(u, v);
  return Graph::from_edges(n, std::move(ce));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite parts must be nonempty");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e = g.edges;
  for (auto [u, v] : h.edges) e.emplace_back(u + g.n, v + g.n);
  return Graph::from_edges(g.n + h.n, std::move(e));
}

DistanceMatrix all_pairs_distance(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<std::size_t>(g.n) * g.n, Dist::infinity());
  std::deque<int> queue;
  for (int s = 0; s < g.n; ++s) {
    dm.at(s, s) = Dist::finite(0);
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      int du = dm.at(s, u).value();
      for (int v : g.adj[u]) {
        if (dm.at(s, v).is_finite()) continue;
        dm.at(s, v) = Dist::finite(du + 1);
        queue.push_back(v);
      }
    }
  }
  return dm;
}

ComponentsInfo components_and_diameter(const Graph& g) {
  ComponentsInfo info;
  DistanceMatrix dm = all_pairs_distance(g);
  std::vector<int> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    for (int v = 0; v < g.n; ++v)
      if (dm.at(s, v).is_finite()) {
        comp.push_back(v);
        seen[v] = 1;
      }
    info.components.push_back(std::move(comp));
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      Dist d = dm.at(i, j);
      if (d.is_finite()) info.diameter = std::max(info.diameter, d.value());
    }
  return info;
}

ZeroOneMatrix d_adjacency(const DistanceMatrix& dm, int t) {
  if (t < 0) throw std::invalid_argument("distance parameter must be >= 0");
  ZeroOneMatrix m(dm.n);
  for (int i = 0; i < dm.n; ++i)
    for (int j = 0; j < dm.n; ++j)
      if (dm.at(i, j) == t) m.at(i, j) = 1;
  return m;
}

ZeroOneMatrix d_adjacency(const Graph& g, int t) {
  return d_adjacency(all_pairs_distance(g), t);
}

namespace {

struct SpecCursor {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph spec error at position " + std::to_string(pos) + ": " +
                     what + " (in \"" + s + "\")");
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string word() {
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  int number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }
};

Graph parse_spec_at(SpecCursor& c);

Graph parse_union(SpecCursor& c) {
  if (!c.eat('(')) c.fail("expected '(' after union");
  Graph g = parse_spec_at(c);
  if (!c.eat(',')) c.fail("expected ',' between union operands");
  Graph h = parse_spec_at(c);
  if (!c.eat(')')) c.fail("expected ')' closing union");
  return disjoint_union(g, h);
}

Graph parse_spec_at(SpecCursor& c) {
  while (c.pos < c.s.size() && c.s[c.pos] == ' ') ++c.pos;
  std::string name = c.word();
  if (name == "cycle" || name == "complete" || name == "path") {
    if (!c.eat(':')) c.fail("expected ':' after family name");
    int n = c.number();
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    return path_graph(n);
  }
  if (name == "petersen") return petersen_graph();
  if (name == "k33") return complete_bipartite_graph(3, 3);
  if (name == "union") return parse_union(c);
  if (name == "file") {
    if (!c.eat(':')) c.fail("expected ':' after file");
    std::size_t start = c.pos;
    int depth = 0;
    while (c.pos < c.s.size() && !(depth == 0 && (c.s[c.pos] == ',' || c.s[c.pos] == ')'))) {
      if (c.s[c.pos] == '(') ++depth;
      if (c.s[c.pos] == ')') --depth;
      ++c.pos;
    }
    std::string path = c.s.substr(start, c.pos - start);
    if (path.empty()) c.fail("empty file path");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph_text(in, path);
  }
  c.fail("unknown graph family \"" + name + "\"");
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  SpecCursor c{spec};
  Graph g = parse_spec_at(c);
  while (c.pos < spec.size() && spec[c.pos] == ' ') ++c.pos;
  if (c.pos != spec.size()) c.fail("trailing characters");
  return g;
}

Graph build_named_graph(const std::string& spec) { return parse_graph_spec(spec); }

Graph read_graph_text(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(origin + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "#") continue;
    if (tag == "n") {
      if (n != -1) fail("duplicate vertex-count line");
      if (!(ls >> n) || n < 1) fail("malformed vertex count");
    } else if (tag == "e") {
      if (n == -1) fail("edge line before vertex count");
      int u, v;
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
      if (u == v) fail("self-loop not allowed");
      edges.emplace_back(u, v);
    } else {
      fail("unknown line tag \"" + tag + "\"");
    }
  }
  if (n == -1) {
    lineno = 0;
    fail("missing vertex-count line");
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto [u, v] : g.edges) out << "e " << u << " " << v << "\n";
  return out.str();
}

}  // namespace ngg
