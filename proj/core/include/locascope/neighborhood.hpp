#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locascope/ball.hpp"
#include "locascope/canonical.hpp"
#include "locascope/graph.hpp"

namespace locascope {

/// Ball-class frequencies p_G(alpha) for every radius s <= radius, keyed by
/// canonical code bytes.
struct NeighborhoodDistribution {
  std::size_t radius = 0;
  /// frequencies[s][code] for s = 0..radius.
  std::vector<std::map<std::string, double>> frequencies;
  /// Raw root counts backing `frequencies`; empty when loaded from a file.
  std::vector<std::map<std::string, std::uint64_t>> counts;
  /// Number of sampled roots, or nullopt when every vertex was used.
  std::optional<std::size_t> sample_size;

  bool exact() const noexcept { return !sample_size.has_value(); }
  double frequency(std::size_t s, const std::string& code) const;

  /// Rebuilds `frequencies` from `counts` over `total` roots.
  void normalize(std::uint64_t total);
};

/// Accumulates root-ball classes; shared by the exact statistics and the
/// sampling tester.
class BallCensus {
 public:
  explicit BallCensus(std::size_t radius);

  void add(const RootedBall& ball_at_radius);
  NeighborhoodDistribution finish(std::optional<std::size_t> sample_size) const;

 private:
  std::size_t radius_;
  std::uint64_t roots_ = 0;
  std::vector<std::map<std::string, std::uint64_t>> counts_;
};

/// Exact statistics over all vertices.
NeighborhoodDistribution neighborhood_distribution(const Graph& g, std::size_t r);

/// Sup over radii and classes of |freq1 - freq2|; absent classes count as 0.
/// Throws Error{RadiusMismatch} unless both share the same radius.
double stats_distance(const NeighborhoodDistribution& a, const NeighborhoodDistribution& b);

}  // namespace locascope
