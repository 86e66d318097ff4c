#include "locascope/neighborhood.hpp"

#include <algorithm>
#include <cmath>

#include "locascope/error.hpp"

namespace locascope {

double NeighborhoodDistribution::frequency(std::size_t s, const std::string& code) const {
  if (s >= frequencies.size()) return 0.0;
  auto it = frequencies[s].find(code);
  return it == frequencies[s].end() ? 0.0 : it->second;
}

void NeighborhoodDistribution::normalize(std::uint64_t total) {
  frequencies.assign(counts.size(), {});
  for (std::size_t s = 0; s < counts.size(); ++s) {
    for (const auto& [code, count] : counts[s]) {
      frequencies[s][code] = total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
    }
  }
}

BallCensus::BallCensus(std::size_t radius) : radius_(radius), counts_(radius + 1) {}

void BallCensus::add(const RootedBall& ball_at_radius) {
  ++roots_;
  for (std::size_t s = 0; s <= radius_; ++s) {
    const RootedBall sub = truncate_ball(ball_at_radius, s);
    ++counts_[s][canonical_rooted_code(sub).bytes];
  }
}

NeighborhoodDistribution BallCensus::finish(std::optional<std::size_t> sample_size) const {
  NeighborhoodDistribution out;
  out.radius = radius_;
  out.counts = counts_;
  out.sample_size = sample_size;
  out.normalize(roots_);
  return out;
}

NeighborhoodDistribution neighborhood_distribution(const Graph& g, std::size_t r) {
  BallCensus census(r);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) census.add(ball(g, static_cast<Vertex>(v), r));
  return census.finish(std::nullopt);
}

double stats_distance(const NeighborhoodDistribution& a, const NeighborhoodDistribution& b) {
  if (a.radius != b.radius) {
    throw Error(ErrorCode::RadiusMismatch, "statistics radii differ (" + std::to_string(a.radius) + " vs " +
                                               std::to_string(b.radius) + ")");
  }
  double worst = 0.0;
  for (std::size_t s = 0; s <= a.radius; ++s) {
    if (s < a.frequencies.size())
      for (const auto& [code, f] : a.frequencies[s]) worst = std::max(worst, std::abs(f - b.frequency(s, code)));
    if (s < b.frequencies.size())
      for (const auto& [code, f] : b.frequencies[s]) worst = std::max(worst, std::abs(f - a.frequency(s, code)));
  }
  return worst;
}

}  // namespace locascope
