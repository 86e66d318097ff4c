#include "locascope/tester.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace locascope {

void TesterDatabase::validate() const {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "match tolerance must be positive");
  if (param.kind == ParameterKind::SpectralCdf) {
    throw Error(ErrorCode::InvalidArgument, "tester databases hold scalar parameters only");
  }
  std::set<std::string> labels;
  for (const auto& e : entries) {
    if (e.label.empty()) throw Error(ErrorCode::InvalidArgument, "database labels must be nonempty");
    if (!labels.insert(e.label).second) throw Error(ErrorCode::DuplicateLabel, "duplicate database label '" + e.label + "'");
    if (e.stats.radius != radius) {
      throw Error(ErrorCode::RadiusMismatch, "entry '" + e.label + "' has statistics at a different radius");
    }
  }
}

TesterDatabase build_database(std::span<const std::pair<std::string, Graph>> graphs, std::size_t r,
                              const ParameterSpec& spec, double delta_match, double delta_solve, std::size_t r_cap,
                              const SolverLimits& limits) {
  if (graphs.empty()) throw Error(ErrorCode::InvalidArgument, "database needs at least one graph");
  TesterDatabase db;
  db.radius = r;
  db.param = spec;
  db.delta = delta_match;
  for (const auto& [label, g] : graphs) {
    DatabaseEntry e{label, {}, 0.0};
    e.stats.radius = r;
    db.entries.push_back(std::move(e));
  }
  db.validate();  // labels and tolerance, before the expensive part
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i].second;
    db.entries[i].stats = neighborhood_distribution(g, r);
    try {
      db.entries[i].zeta = exact_parameter(g, spec, limits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ComponentTooLarge) throw;
      db.entries[i].zeta = estimate_parameter(g, delta_solve, r_cap, spec, limits).value;
    }
  }
  return db;
}

TestOutput run_tester(const EmpiricalDistribution& y, const TesterDatabase& db) {
  if (y.stats.radius != db.radius) {
    throw Error(ErrorCode::RadiusMismatch, "sample radius " + std::to_string(y.stats.radius) +
                                               " differs from database radius " + std::to_string(db.radius));
  }
  if (db.entries.empty()) throw Error(ErrorCode::InvalidArgument, "database has no entries");
  const DatabaseEntry* best = nullptr;
  double best_distance = 0.0;
  for (const auto& e : db.entries) {
    const double dist = stats_distance(y.stats, e.stats);
    if (!best || dist < best_distance || (dist == best_distance && e.label < best->label)) {
      best = &e;
      best_distance = dist;
    }
  }
  if (best_distance > db.delta) {
    std::ostringstream msg;
    msg << "nearest entry '" << best->label << "' is at distance " << best_distance << " > tolerance " << db.delta;
    throw NoMatchError(msg.str(), best->label, best_distance);
  }
  return {best->zeta, best->label, best_distance};
}

}  // namespace locascope
