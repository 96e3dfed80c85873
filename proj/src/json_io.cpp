#include "ngg/json_io.hpp"

#include <sstream>

namespace ngg {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  return json{{"n", g.n}, {"edges", edges}};
}

json witness_to_json(const BistochasticWitness& w) {
  json u = json::array();
  for (int i = 0; i < w.u.rows(); ++i)
    for (int j = 0; j < w.u.cols(); ++j) u.push_back(rat_to_string(w.u.at(i, j)));
  return json{{"rows", w.u.rows()}, {"cols", w.u.cols()}, {"u", u}};
}

BistochasticWitness witness_from_json(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& u = j.at("u");
  if (static_cast<int>(u.size()) != rows * cols)
    throw std::invalid_argument("witness entry count does not match its shape");
  RatMatrix m(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int jj = 0; jj < cols; ++jj)
      m.at(i, jj) = rat_from_string(u[idx++].get<std::string>());
  return {std::move(m)};
}

json paired_partition_to_json(const PairedPartition& p) {
  return json{{"k", p.k},         {"n", p.sizes},        {"c", p.c},
              {"cbar", p.cbar},   {"cells_g", p.cells_g}, {"cells_h", p.cells_h}};
}

json box_to_json(const NonlocalBox& b, const json& provenance) {
  json table = json::array();
  int nx = static_cast<int>(b.in_a.size()), ny = static_cast<int>(b.in_b.size());
  int na = static_cast<int>(b.out_a.size()), nb = static_cast<int>(b.out_b.size());
  for (int x = 0; x < nx; ++x) {
    json jx = json::array();
    for (int y = 0; y < ny; ++y) {
      json jy = json::array();
      for (int a = 0; a < na; ++a) {
        json ja = json::array();
        for (int bb = 0; bb < nb; ++bb) ja.push_back(rat_to_string(b.at(x, y, a, bb)));
        jy.push_back(std::move(ja));
      }
      jx.push_back(std::move(jy));
    }
    table.push_back(std::move(jx));
  }
  json out{{"xa", b.in_a}, {"xb", b.in_b}, {"ya", b.out_a}, {"yb", b.out_b},
           {"p", std::move(table)}};
  if (!provenance.is_null()) out["provenance"] = provenance;
  return out;
}

NonlocalBox box_from_json(const json& j) {
  NonlocalBox b(j.at("xa").get<std::vector<int>>(), j.at("xb").get<std::vector<int>>(),
                j.at("ya").get<std::vector<int>>(), j.at("yb").get<std::vector<int>>());
  const json& table = j.at("p");
  int nx = static_cast<int>(b.in_a.size()), ny = static_cast<int>(b.in_b.size());
  int na = static_cast<int>(b.out_a.size()), nb = static_cast<int>(b.out_b.size());
  if (static_cast<int>(table.size()) != nx)
    throw std::invalid_argument("box table shape mismatch");
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int a = 0; a < na; ++a)
        for (int bb = 0; bb < nb; ++bb)
          b.at(x, y, a, bb) =
              rat_from_string(table.at(x).at(y).at(a).at(bb).get<std::string>());
  return b;
}

json box_report_to_json(const BoxReport& r) {
  return json{{"nonnegative", r.nonnegative},
              {"normalized", r.normalized},
              {"ns_alice", r.ns_alice},
              {"ns_bob", r.ns_bob},
              {"pass", r.pass()},
              {"first_violation", r.first_violation}};
}

json winning_probability_to_json(const WinningProbability& wp) {
  return json{{"worst_case", rat_to_string(wp.worst_case)},
              {"uniform_average", rat_to_string(wp.uniform_average)},
              {"perfect", wp.worst_case == 1}};
}

json transitivity_profile_to_json(const TransitivityProfile& p) {
  json j{{"vertex_transitive", p.vertex_transitive},
         {"edge_transitive", p.edge_transitive},
         {"distance_transitive", p.distance_transitive},
         {"strongly_transitive", p.strongly_transitive}};
  j["d1"] = p.d1 ? json(*p.d1) : json();
  j["d2"] = p.d2 ? json(*p.d2) : json();
  j["d3"] = p.d3 ? json(*p.d3) : json();
  return j;
}

json analysis_to_json(const BoxAnalysis& a, const ProtocolWiring* wiring) {
  json m_p = json::array();
  for (const auto& row : a.table.m) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(rat_to_string(x));
    m_p.push_back(std::move(r));
  }
  json j{{"m_p", std::move(m_p)},
         {"alpha", a.pr_ab ? json(rat_to_string(a.pr_ab->first)) : json()},
         {"beta", a.pr_ab ? json(rat_to_string(a.pr_ab->second)) : json()},
         {"chsh_worst", rat_to_string(a.chsh_worst)},
         {"chsh_avg", rat_to_string(a.chsh_avg)},
         {"verdict", a.verdict},
         {"criterion", a.criterion}};
  if (wiring) {
    j["wiring"] = json{{"kind", wiring->kind}, {"x0", wiring->x0}, {"x1", wiring->x1},
                       {"y0", wiring->y0},     {"y1", wiring->y1}, {"h1", wiring->h1},
                       {"h2", wiring->h2}};
  } else {
    j["wiring"] = json();
  }
  return j;
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      render(value, path, out);
    }
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      out << prefix << ": " << j.dump() << "\n";
    } else {
      int i = 0;
      for (const auto& e : j) render(e, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string json_to_text(const json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace ngg
