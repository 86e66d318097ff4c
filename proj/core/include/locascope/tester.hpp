#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locascope/ball.hpp"
#include "locascope/error.hpp"
#include "locascope/estimate.hpp"
#include "locascope/neighborhood.hpp"
#include "locascope/rng.hpp"

namespace locascope {

/// Graph wrapper that counts neighbour-list queries.
class CountingGraph {
 public:
  explicit CountingGraph(const Graph& g) : g_(&g) {}

  std::size_t num_vertices() const noexcept { return g_->num_vertices(); }
  std::size_t degree_bound() const noexcept { return g_->degree_bound(); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    ++accesses_;
    return g_->neighbors(v);
  }

  std::size_t accesses() const noexcept { return accesses_; }
  void reset() noexcept { accesses_ = 0; }

 private:
  const Graph* g_;
  mutable std::size_t accesses_ = 0;
};

struct EmpiricalDistribution {
  NeighborhoodDistribution stats;  // sample_size = k
  std::size_t radius = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t max_ball_size = 0;  // largest B_r seen while sampling
};

/// k roots drawn uniformly with replacement; root i comes from the counter
/// stream (seed, i). Records ball classes for every s <= r.
template <NeighborAccess G>
EmpiricalDistribution sample_stats(const G& g, std::size_t r, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "sample count k must be at least 1");
  const std::size_t n = g.num_vertices();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cannot sample from an empty graph");
  EmpiricalDistribution out;
  out.radius = r;
  out.k = k;
  out.seed = seed;
  BallCensus census(r);
  for (std::size_t i = 0; i < k; ++i) {
    const auto root = static_cast<Vertex>(bounded(stream_value(seed, i), n));
    RootedBall b = extract_ball(g, root, r);
    out.max_ball_size = std::max(out.max_ball_size, b.size());
    census.add(b);
  }
  out.stats = census.finish(k);
  return out;
}

struct DatabaseEntry {
  std::string label;
  NeighborhoodDistribution stats;
  double zeta = 0.0;
};

struct TesterDatabase {
  std::size_t radius = 0;
  ParameterSpec param;
  double delta = 0.0;  // match tolerance
  std::vector<DatabaseEntry> entries;

  /// Throws on empty/duplicate labels, radius mismatches or delta <= 0.
  void validate() const;
};

struct TestOutput {
  double value = 0.0;
  std::string label;
  double distance = 0.0;
};

/// Exact statistics at radius r plus zeta for every reference graph. zeta is
/// solved exactly over connected components when every component fits the
/// solver limits, and estimated with (delta_solve, r_cap) otherwise.
TesterDatabase build_database(std::span<const std::pair<std::string, Graph>> graphs, std::size_t r,
                              const ParameterSpec& spec, double delta_match, double delta_solve,
                              std::size_t r_cap = kDefaultRadiusCap, const SolverLimits& limits = {});

/// Nearest entry by stats_distance (ties: smallest label). Throws NoMatchError
/// when even the nearest entry is farther than db.delta.
TestOutput run_tester(const EmpiricalDistribution& y, const TesterDatabase& db);

}  // namespace locascope
