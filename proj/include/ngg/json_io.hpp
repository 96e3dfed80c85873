#pragma once

#include <json.hpp>

#include "ngg/automorphism.hpp"
#include "ngg/box.hpp"
#include "ngg/collapse.hpp"
#include "ngg/frac_iso.hpp"
#include "ngg/game.hpp"
#include "ngg/graph.hpp"
#include "ngg/partition.hpp"

namespace ngg {

using nlohmann::json;

// Rationals cross the interchange boundary as "p/q" strings only.
json graph_to_json(const Graph& g);
json witness_to_json(const BistochasticWitness& w);
BistochasticWitness witness_from_json(const json& j);
json paired_partition_to_json(const PairedPartition& p);
json box_to_json(const NonlocalBox& b, const json& provenance = json());
NonlocalBox box_from_json(const json& j);
json box_report_to_json(const BoxReport& r);
json winning_probability_to_json(const WinningProbability& wp);
json transitivity_profile_to_json(const TransitivityProfile& p);
json analysis_to_json(const BoxAnalysis& a, const ProtocolWiring* wiring = nullptr);

// Flat human rendering of a report object ("--format text").
std::string json_to_text(const json& j);

}  // namespace ngg
