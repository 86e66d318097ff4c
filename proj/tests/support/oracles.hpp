#pragma once

// Brute-force reference implementations. They only read vertex counts and
// edge lists, never the library's solvers, so agreement with the library is
// meaningful. All are exponential; keep inputs tiny.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "locascope/graph.hpp"

namespace oracle {

using locascope::Edge;
using locascope::Graph;
using locascope::Vertex;

struct Dense {
  int n = 0;
  std::vector<std::uint32_t> adj;  // bitmask per vertex
  std::vector<Edge> edges;
};
Dense dense(const Graph& g);

int max_independent_set(const Graph& g);
int max_matching(const Graph& g);
/// counts[k] = number of independent sets / matchings of size k.
std::vector<std::uint64_t> independence_counts(const Graph& g);
std::vector<std::uint64_t> matching_counts(const Graph& g);

/// Minimum number of monochromatic edges over all k-colourings.
int min_monochromatic_edges(const Graph& g, int k);
/// Fewest edge deletions leaving a forest / a triangle-free graph, by
/// enumerating edge subsets.
int edges_to_forest(const Graph& g);
int edges_to_triangle_free(const Graph& g);

bool is_independent(const Graph& g, const std::vector<Vertex>& set);
bool is_matching(const Graph& g, const std::vector<Edge>& m);

/// Permutation search. With roots given, the isomorphism must map ra to rb.
bool isomorphic(const Graph& a, const Graph& b, std::optional<Vertex> ra = {}, std::optional<Vertex> rb = {});

/// All-pairs hop distances (-1 when unreachable).
std::vector<std::vector<int>> distances(const Graph& g);

/// Laplacian (plus diagonal potential) eigenvalues through Eigen.
std::vector<double> laplacian_eigenvalues(const Graph& g, const std::vector<double>& potential = {});

/// Connected graphs on exactly n vertices, one per isomorphism class, by
/// repeatedly attaching a new vertex to every nonempty subset of an existing
/// class member and deduplicating with permutation-invariant certificates.
std::vector<std::vector<Graph>> connected_graphs_up_to(int max_n);

/// Random connected graph with maximum degree <= d: random spanning tree
/// grown with the degree cap, plus `extra` attempted chords.
Graph random_connected(int n, int d, int extra, std::mt19937_64& rng);

/// Relabels vertices by `perm` (new id of old vertex v is perm[v]).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace oracle
