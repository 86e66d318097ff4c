#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "locascope/graph.hpp"

namespace locascope {

/// Anything that answers neighbour queries like a Graph. Lets the tester wrap
/// a graph with an access counter without copying it.
template <class G>
concept NeighborAccess = requires(const G& g, Vertex v) {
  { g.num_vertices() } -> std::convertible_to<std::size_t>;
  { g.degree_bound() } -> std::convertible_to<std::size_t>;
  g.neighbors(v).begin();
  g.neighbors(v).end();
};

/// Induced subgraph on B_r(root). Local vertex ids follow BFS order, so the
/// root is local vertex 0 and depths are nondecreasing in local id.
struct RootedBall {
  Graph graph;
  std::vector<Vertex> host_ids;
  std::vector<std::uint32_t> depth;  // distance from the root in the host graph
  std::size_t radius = 0;

  static constexpr Vertex root = 0;
  std::size_t size() const noexcept { return host_ids.size(); }
};

/// Breadth-first extraction of B_r(v). Each vertex of the ball has its
/// neighbour list queried exactly once, so a run costs |B_r(v)| accesses.
template <NeighborAccess G>
RootedBall extract_ball(const G& g, Vertex v, std::size_t r) {
  RootedBall ball;
  ball.radius = r;
  std::unordered_map<Vertex, Vertex> local;
  std::vector<std::vector<Vertex>> adjacency;
  ball.host_ids.push_back(v);
  ball.depth.push_back(0);
  local.emplace(v, 0);
  for (std::size_t head = 0; head < ball.host_ids.size(); ++head) {
    const Vertex u = ball.host_ids[head];
    const auto nb = g.neighbors(u);
    adjacency.emplace_back(nb.begin(), nb.end());
    if (ball.depth[head] >= r) continue;
    for (Vertex w : adjacency.back()) {
      if (local.emplace(w, static_cast<Vertex>(ball.host_ids.size())).second) {
        ball.host_ids.push_back(w);
        ball.depth.push_back(ball.depth[head] + 1);
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (Vertex w : adjacency[i]) {
      auto it = local.find(w);
      if (it != local.end() && it->second > i) edges.emplace_back(static_cast<Vertex>(i), it->second);
    }
  }
  ball.graph = build_graph_unchecked(ball.host_ids.size(), std::move(edges), g.degree_bound());
  return ball;
}

inline RootedBall ball(const Graph& g, Vertex v, std::size_t r) { return extract_ball(g, v, r); }

/// B_s(root) of an already extracted ball, for s <= ball.radius.
RootedBall truncate_ball(const RootedBall& ball, std::size_t s);

/// Distances from the root recomputed inside the ball's own graph.
std::vector<std::uint32_t> internal_depths(const RootedBall& ball);

}  // namespace locascope
