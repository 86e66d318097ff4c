#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locascope/canonical.hpp"
#include "locascope/graph.hpp"

namespace locascope {

inline constexpr std::size_t kDefaultRadiusCap = 40;

/// One piece of the decomposition. `vertices` holds the original ids in
/// ascending order; local vertex i of `graph` is vertices[i].
struct Component {
  std::vector<Vertex> vertices;
  Graph graph;
};

struct Decomposition {
  std::size_t num_vertices = 0;
  std::size_t degree_bound = 0;
  std::vector<Edge> removed_edges;  // (u < v), sorted
  std::vector<Component> components;
  std::size_t k_observed = 0;
  double delta_used = 0.0;
  std::size_t r_cap = 0;
  /// Some greedy step found no low-cut ball within r_cap and cut the
  /// radius-r_cap ball anyway; the edge budget is then not guaranteed.
  bool budget_exceeded = false;
};

struct CensusClass {
  ComponentCode code;
  Graph representative;
  std::uint64_t copies = 0;
  std::uint64_t vertices = 0;
};

/// Vertex mass per isomorphism class of components, sorted by code.
struct Census {
  std::uint64_t total_vertices = 0;
  std::vector<CensusClass> classes;

  double fraction(std::size_t i) const {
    return total_vertices == 0 ? 0.0
                               : static_cast<double>(classes[i].vertices) / static_cast<double>(total_vertices);
  }
  /// hex code -> fraction
  std::map<std::string, double> fractions() const;
};

/// Smallest r <= r_cap whose ball B_r(v) has at most delta * |B_r(v)| edges
/// leaving it, or nullopt.
std::optional<std::size_t> folner_radius(const Graph& g, Vertex v, double delta, std::size_t r_cap);

/// Greedy low-cut ball carving: repeatedly take the smallest uncovered vertex,
/// grow its ball in the residual graph until the cut is within budget, cut the
/// boundary, and emit the ball as a component. Deterministic.
///
/// Throws Error{InvalidArgument} unless 0 < delta <= 1 and r_cap >= 1.
Decomposition hyperfinite_decompose(const Graph& g, double delta, std::size_t r_cap = kDefaultRadiusCap);

Census component_census(const Decomposition& d);

/// Sup over classes of the difference in vertex fractions.
double census_distance(const Census& a, const Census& b);

}  // namespace locascope
