#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "locascope/decompose.hpp"
#include "locascope/estimate.hpp"
#include "locascope/neighborhood.hpp"
#include "locascope/spectral.hpp"
#include "locascope/tester.hpp"

namespace locascope {

using Json = nlohmann::ordered_json;

/// {"0": {"<hex>": freq, ...}, "1": {...}, ...}
Json stats_to_json(const NeighborhoodDistribution& d);
NeighborhoodDistribution stats_from_json(const Json& j, std::size_t radius);

/// {"removed_edges":[[u,v],...],"components":[{"vertices":[...]}],"census":{"<hex>":fraction}, ...}
Json decomposition_to_json(const Decomposition& d, const Census& census);

Json step_function_to_json(const StepFunction& f);
/// "lambda,value" header plus one row per jump point.
std::string step_function_to_csv(const StepFunction& f);

Json estimate_to_json(const Estimate& e, const ParameterSpec& spec);

/// {"radius":r,"param":{"name":...},"delta":d,"entries":[{"label","stats","zeta"}]}
Json database_to_json(const TesterDatabase& db);
/// Throws Error{ParseError} on malformed input and validates the result.
TesterDatabase database_from_json(const Json& j);

/// Rows "kind,graph_index,n,seed_a,seed_b,distance".
std::string ids_report_to_csv(const IdsReport& report);

}  // namespace locascope
