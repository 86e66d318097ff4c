#include "locascope/ball.hpp"

#include <algorithm>
#include <limits>

namespace locascope {

RootedBall truncate_ball(const RootedBall& ball, std::size_t s) {
  if (s >= ball.radius) return ball;
  // BFS order keeps depths sorted, so B_s is a prefix.
  const auto end = std::upper_bound(ball.depth.begin(), ball.depth.end(), static_cast<std::uint32_t>(s));
  const auto count = static_cast<std::size_t>(end - ball.depth.begin());
  RootedBall out;
  out.radius = s;
  out.host_ids.assign(ball.host_ids.begin(), ball.host_ids.begin() + static_cast<std::ptrdiff_t>(count));
  out.depth.assign(ball.depth.begin(), end);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < count; ++u) {
    for (Vertex w : ball.graph.neighbors(static_cast<Vertex>(u))) {
      if (w > u && w < count) edges.emplace_back(static_cast<Vertex>(u), w);
    }
  }
  out.graph = build_graph_unchecked(count, std::move(edges), ball.graph.degree_bound());
  return out;
}

std::vector<std::uint32_t> internal_depths(const RootedBall& ball) {
  const std::size_t n = ball.size();
  std::vector<std::uint32_t> depth(n, std::numeric_limits<std::uint32_t>::max());
  if (n == 0) return depth;
  std::vector<Vertex> queue{RootedBall::root};
  depth[RootedBall::root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : ball.graph.neighbors(u)) {
      if (depth[w] == std::numeric_limits<std::uint32_t>::max()) {
        depth[w] = depth[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return depth;
}

}  // namespace locascope
