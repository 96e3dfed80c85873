#include <doctest.h>

#include "ngg/json_io.hpp"
#include "ngg/strategy.hpp"
#include "test_helpers.hpp"

using namespace ngg;
using namespace ngg::testing;

TEST_CASE("rational strings") {
  CHECK(rat_to_string(rat(1, 6)) == "1/6");
  CHECK(rat_to_string(rat(-2, 4)) == "-1/2");
  CHECK(rat_to_string(Rat(3)) == "3/1");
  CHECK(rat_from_string("4/6") == rat(2, 3));
  CHECK(rat_from_string("7") == 7);
  CHECK(rat_from_string("-7/2") == rat(-7, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("witness round-trip") {
  CyclePair cp = paired_cycle_family(2);
  json j = witness_to_json(cp.witness);
  BistochasticWitness back = witness_from_json(j);
  CHECK(back.u == cp.witness.u);
}

TEST_CASE("box round-trip is entry-identical") {
  Graph g = cycle_graph(6);
  Graph h = disjoint_union(complete_graph(3), complete_graph(3));
  auto p = common_equitable_partition(g, h, 1);
  REQUIRE(p.has_value());
  NonlocalBox box = strategy_from_partition(*p, g, h, 1);
  json j = box_to_json(box, json{{"source", "partition"}});
  NonlocalBox back = box_from_json(j);
  CHECK(back == box);
  CHECK(j.at("provenance").at("source") == "partition");
}

TEST_CASE("paired partition serialization shape") {
  Graph g = cycle_graph(6);
  Graph h = disjoint_union(complete_graph(3), complete_graph(3));
  auto p = common_equitable_partition(g, h, 1);
  REQUIRE(p.has_value());
  json j = paired_partition_to_json(*p);
  CHECK(j.at("k") == 1);
  CHECK(j.at("n") == json::array({6}));
  CHECK(j.at("c").at(1).at(0).at(0) == 2);
  CHECK(j.at("cbar").at(0).at(0) == 3);
  CHECK(j.at("cells_g").size() == 1);
  CHECK(j.at("cells_h").at(0).size() == 6);
}

TEST_CASE("text rendering is flat and deterministic") {
  json j{{"verdict", "collapse"}, {"alpha", "1/1"}, {"m", json::array({1, 2})}};
  std::string text = json_to_text(j);
  CHECK(text.find("verdict: \"collapse\"") != std::string::npos);
  CHECK(text.find("m: [1,2]") != std::string::npos);
}
