#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rearrange/canonical.hpp"
#include "rearrange/nig.hpp"
#include "rearrange/transitivity.hpp"
#include "rearrange/wandering.hpp"

namespace rearrange {

std::string serialize_diagram(const GraphPairDiagram& d);
GraphPairDiagram parse_diagram(const SystemPtr& sys, const std::string& text);
std::vector<GraphPairDiagram> parse_diagrams(const SystemPtr& sys,
                                             const std::string& text);

nlohmann::json to_json(const GraphPairDiagram& d);
nlohmann::json to_json(const CellUnion& cells);
nlohmann::json to_json(const CanonicalElement& c);
nlohmann::json to_json(const WanderingCertificate& cert);
nlohmann::json to_json(const MinimalityReport& report);
nlohmann::json to_json(const NigResult& result);

std::string to_dot(const ReplacementSystem& sys);
std::string to_dot(const Expansion& e);
std::string to_dot(const GraphPairDiagram& d);

}  // namespace rearrange
