#include "locascope/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "locascope/error.hpp"

namespace locascope {

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph build_graph_unchecked(std::size_t n, std::vector<Edge> edges, std::size_t degree_bound) {
  Graph g;
  g.degree_bound_ = degree_bound;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::size_t degree_bound) {
  if (degree_bound == 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be positive");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end()) {
    throw Error(ErrorCode::InvalidEdge,
                "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : normalized) {
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] > degree_bound) {
      throw Error(ErrorCode::DegreeBoundExceeded, "vertex " + std::to_string(v) + " has degree " +
                                                      std::to_string(deg[v]) + " > " + std::to_string(degree_bound));
    }
  }
  return build_graph_unchecked(n, std::move(normalized), degree_bound);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  // Local ids follow the order of `vertices`; lookups go through a sorted copy.
  std::vector<std::pair<Vertex, Vertex>> index;
  index.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace_back(vertices[i], static_cast<Vertex>(i));
  std::sort(index.begin(), index.end());
  auto local = [&](Vertex host) -> long {
    auto it = std::lower_bound(index.begin(), index.end(), std::pair<Vertex, Vertex>{host, 0});
    if (it == index.end() || it->first != host) return -1;
    return it->second;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      long j = local(w);
      if (j > static_cast<long>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return build_graph_unchecked(vertices.size(), std::move(edges), g.degree_bound());
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return build_graph_unchecked(g.num_vertices(), std::move(kept), g.degree_bound());
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::size_t bound = 1;
  std::vector<Edge> edges;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) edges.emplace_back(static_cast<Vertex>(u + n), static_cast<Vertex>(v + n));
    n += p.num_vertices();
    bound = std::max(bound, p.degree_bound());
  }
  return build_graph_unchecked(n, std::move(edges), bound);
}

double edge_distance(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices()) {
    throw Error(ErrorCode::VertexSetMismatch, "edge distance needs equal vertex counts (" +
                                                  std::to_string(g.num_vertices()) + " vs " +
                                                  std::to_string(h.num_vertices()) + ")");
  }
  if (g.num_vertices() == 0) return 0.0;
  auto a = g.edges();
  auto b = h.edges();
  std::vector<Edge> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return static_cast<double>(diff.size()) / static_cast<double>(g.num_vertices());
}

}  // namespace locascope
