#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netop/algebra.hpp"
#include "netop/grothendieck.hpp"
#include "netop/monoid.hpp"
#include "netop/network.hpp"
#include "netop/operad.hpp"
#include "netop/permutation.hpp"
#include "netop/petri.hpp"

namespace netop {

using json = nlohmann::json;

// Permutations are 1-based image arrays.
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// "bool", "nat-add", "nat-max", "free-one", {"kind": "trunc-add", "k": 2}.
json to_json(const MonoidSpec& m);
MonoidSpec monoid_from_json(const json& j);
// Also accepts "trunc-add:2".
MonoidSpec parse_monoid(const std::string& text);
Variety parse_variety(const std::string& text);

// Base models by name ("sg", "dg", "mg", "mgplus", "hg", "partition-join",
// "partition-meet", "petri"); composites as objects with a "kind" field.
json to_json(const ModelSpec& m);
ModelSpec model_from_json(const json& j);

// Names of the model's colors; empty when one-colored.
std::vector<std::string> color_names(const ModelSpec& m);

// {"model": ..., "n": ..., "payload": ...}, plus "colors" when the model has
// several. Vertices are 1-based in payloads.
json to_json(const Network& g);
Network network_from_json(const json& j);
// A payload read against a known model and color word.
Network network_from_payload(const ModelSpec& model, const ColorWord& colors, const json& payload);
json payload_to_json(const Network& g);

json to_json(const TotalMorphism& f);
TotalMorphism total_from_json(const json& j);

json to_json(const OperadOperation& f);
OperadOperation operation_from_json(const json& j, const ModelSpec& model);

// Coordinate arrays become points; strings become tokens.
json to_json(const Attribute& a);
Attribute attribute_from_json(const json& j);

json reachability_to_json(const PetriNet& net, const ReachabilityGraph& g);

// Simple, directed and multigraphs; multiplicities become parallel edges.
std::string to_dot(const Network& g);

}  // namespace netop
