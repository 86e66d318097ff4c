#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "locascope/graph.hpp"
#include "locascope/polynomial.hpp"

namespace locascope {

/// Size limits for the exponential kernels. Components above a limit raise
/// Error{ComponentTooLarge}.
struct SolverLimits {
  /// Independent-set branch and bound and both count polynomials (bitmask
  /// kernels, so at most 64).
  std::size_t exact_cap = 64;
  /// Colouring and triangle-hitting enumeration for dist_to_property, applied
  /// per connected component.
  std::size_t coloring_cap = 20;
  /// Dense eigenvalue problems.
  std::size_t spectral_cap = 256;
};

/// Maximum independent set. Bipartite inputs of any size go through König's
/// theorem on a maximum matching; everything else through branch and bound
/// (at most limits.exact_cap vertices). Returned ids are sorted.
std::vector<Vertex> max_independent_set(const Graph& h, const SolverLimits& limits = {});

/// Branch and bound only; exposed so the matching-based route can be checked
/// against it.
std::vector<Vertex> max_independent_set_search(const Graph& h, const SolverLimits& limits = {});

/// Maximum cardinality matching (Edmonds' blossom algorithm). Polynomial, so
/// no size cap applies.
std::vector<Edge> max_matching(const Graph& h);

/// Independence polynomial via pi(H) = pi(H - v) + lambda pi(H - N[v]),
/// splitting disconnected remainders into products.
CountPolynomial independence_polynomial(const Graph& h, const SolverLimits& limits = {});

/// Matching polynomial via the edge recursion pi(H) = pi(H - e) + lambda pi(H - u - v),
/// applied to all edges at one vertex at a time.
CountPolynomial matching_polynomial(const Graph& h, const SolverLimits& limits = {});

enum class PropertyKind { Bipartite, Forest, KColorable, TriangleFree };

struct PropertyTag {
  PropertyKind kind = PropertyKind::Bipartite;
  std::size_t k = 2;  // colours, KColorable only

  static PropertyTag bipartite() { return {PropertyKind::Bipartite, 2}; }
  static PropertyTag forest() { return {PropertyKind::Forest, 0}; }
  static PropertyTag k_colorable(std::size_t k) { return {PropertyKind::KColorable, k}; }
  static PropertyTag triangle_free() { return {PropertyKind::TriangleFree, 0}; }

  /// "bipartite", "forest", "k_colorable(3)", "triangle_free"
  std::string name() const;
  /// Inverse of name(); also accepts "k_colorable:3". Throws Error{ParseError}.
  static PropertyTag parse(const std::string& text);

  friend bool operator==(const PropertyTag&, const PropertyTag&) = default;
};

/// Minimum number of edges to delete so that H gains the property, divided by
/// |V(H)|. Deleting edges suffices because every supported property is
/// monotone.
double dist_to_property(const Graph& h, const PropertyTag& property, const SolverLimits& limits = {});

/// Minimum edge deletions (the numerator of dist_to_property).
std::size_t edges_to_property(const Graph& h, const PropertyTag& property, const SolverLimits& limits = {});

}  // namespace locascope
