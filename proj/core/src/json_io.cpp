#include "locascope/json_io.hpp"

#include <sstream>

#include "locascope/canonical.hpp"
#include "locascope/error.hpp"

namespace locascope {
namespace {

std::string number(double x, int precision = 17) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

}  // namespace

Json stats_to_json(const NeighborhoodDistribution& d) {
  Json out = Json::object();
  for (std::size_t s = 0; s < d.frequencies.size(); ++s) {
    Json level = Json::object();
    for (const auto& [code, freq] : d.frequencies[s]) level[to_hex(code)] = freq;
    out[std::to_string(s)] = std::move(level);
  }
  return out;
}

NeighborhoodDistribution stats_from_json(const Json& j, std::size_t radius) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "stats must be an object keyed by radius");
  NeighborhoodDistribution d;
  d.radius = radius;
  d.frequencies.resize(radius + 1);
  for (const auto& [key, level] : j.items()) {
    std::size_t s = 0;
    try {
      s = std::stoul(key);
    } catch (...) {
      throw Error(ErrorCode::ParseError, "stats radius key '" + key + "' is not a number");
    }
    if (s > radius) throw Error(ErrorCode::RadiusMismatch, "stats contain radius " + key + " above " + std::to_string(radius));
    if (!level.is_object()) throw Error(ErrorCode::ParseError, "stats level " + key + " must be an object");
    for (const auto& [hex, freq] : level.items()) {
      if (!freq.is_number()) throw Error(ErrorCode::ParseError, "frequency for " + hex + " is not a number");
      d.frequencies[s][from_hex(hex)] = freq.get<double>();
    }
  }
  return d;
}

Json decomposition_to_json(const Decomposition& d, const Census& census) {
  Json out;
  Json removed = Json::array();
  for (auto [u, v] : d.removed_edges) removed.push_back({u, v});
  out["removed_edges"] = std::move(removed);
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back({{"vertices", c.vertices}});
  out["components"] = std::move(comps);
  Json cen = Json::object();
  for (const auto& [hex, fraction] : census.fractions()) cen[hex] = fraction;
  out["census"] = std::move(cen);
  out["num_vertices"] = d.num_vertices;
  out["k_observed"] = d.k_observed;
  out["delta_used"] = d.delta_used;
  out["r_cap"] = d.r_cap;
  out["budget_exceeded"] = d.budget_exceeded;
  return out;
}

Json step_function_to_json(const StepFunction& f) {
  return Json{{"points", f.points}, {"values", f.values}};
}

std::string step_function_to_csv(const StepFunction& f) {
  std::string out = "lambda,value\n";
  for (std::size_t i = 0; i < f.points.size(); ++i) out += number(f.points[i], 12) + "," + number(f.values[i]) + "\n";
  return out;
}

Json estimate_to_json(const Estimate& e, const ParameterSpec& spec) {
  Json out;
  out["param"] = spec.name();
  if (e.cdf) {
    out["cdf"] = step_function_to_json(*e.cdf);
  } else {
    out["value"] = e.value;
  }
  out["error_bound"] = e.error_bound;
  out["delta_used"] = e.delta_used;
  out["budget_exceeded"] = e.budget_exceeded;
  out["removed_edges"] = e.removed_edges;
  out["k_observed"] = e.k_observed;
  out["num_vertices"] = e.num_vertices;
  Json cen = Json::object();
  for (const auto& [hex, fraction] : e.census.fractions()) cen[hex] = fraction;
  out["census"] = std::move(cen);
  return out;
}

Json database_to_json(const TesterDatabase& db) {
  Json out;
  out["radius"] = db.radius;
  out["param"] = {{"name", db.param.name()}};
  out["delta"] = db.delta;
  Json entries = Json::array();
  for (const auto& e : db.entries) {
    entries.push_back({{"label", e.label}, {"stats", stats_to_json(e.stats)}, {"zeta", e.zeta}});
  }
  out["entries"] = std::move(entries);
  return out;
}

TesterDatabase database_from_json(const Json& j) {
  TesterDatabase db;
  try {
    db.radius = j.at("radius").get<std::size_t>();
    db.param = ParameterSpec::parse(j.at("param").at("name").get<std::string>());
    db.delta = j.at("delta").get<double>();
    for (const auto& e : j.at("entries")) {
      db.entries.push_back(
          {e.at("label").get<std::string>(), stats_from_json(e.at("stats"), db.radius), e.at("zeta").get<double>()});
    }
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("malformed database: ") + ex.what());
  }
  db.validate();
  return db;
}

std::string ids_report_to_csv(const IdsReport& report) {
  std::string out = "kind,graph_index,n,seed_a,seed_b,distance\n";
  for (const auto& row : report.rows) {
    out += std::string(row.kind == IdsRow::Kind::CrossSeed ? "cross_seed" : "consecutive") + "," +
           std::to_string(row.graph_index) + "," + std::to_string(row.num_vertices) + "," +
           std::to_string(row.seed_a) + "," + std::to_string(row.seed_b) + "," + number(row.distance) + "\n";
  }
  return out;
}

}  // namespace locascope
