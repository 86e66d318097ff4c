#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace locascope {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with a declared degree bound.
///
/// Adjacency is stored in CSR form; every neighbour list is sorted ascending.
/// Instances are only produced through build_graph (or the trusted internal
/// path used by subgraph extraction), so the simple/symmetric/degree-bounded
/// invariants always hold.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, std::size_t);
  friend Graph build_graph_unchecked(std::size_t, std::vector<Edge>, std::size_t);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t degree_bound_ = 0;
};

/// Validating constructor. Throws Error{InvalidEdge} on self-loops, duplicate
/// or out-of-range edges and Error{DegreeBoundExceeded} when a vertex has more
/// than `degree_bound` neighbours.
Graph build_graph(std::size_t n, std::span<const Edge> edges, std::size_t degree_bound);

/// Construction for edge lists already known to be simple and within the
/// bound (induced subgraphs of a valid graph). Edges need not be sorted.
Graph build_graph_unchecked(std::size_t n, std::vector<Edge> edges, std::size_t degree_bound);

/// Subgraph induced on `vertices`; local id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-colouring if one exists.
bool is_bipartite(const Graph& g);

/// Same vertex set with the listed edges removed (edges given as u < v).
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// Disjoint union; vertices of parts[i] are shifted by the sizes of parts[0..i).
Graph disjoint_union(std::span<const Graph> parts);

/// |E(G) symmetric-difference E(H)| / |V|. Throws VertexSetMismatch when the
/// vertex counts differ.
double edge_distance(const Graph& g, const Graph& h);

}  // namespace locascope
