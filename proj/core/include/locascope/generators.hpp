#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locascope/graph.hpp"

namespace locascope {

enum class Family { Path, Cycle, Grid2d, Torus2d, Cube3d, Triangular, Ladder, RandomRegularGirth, DisjointUnion };

/// Compact description of a generated graph.
///
/// String grammar (FamilySpec::parse / to_string):
///   path:N  cycle:N  ladder:N
///   grid2d:AxB  torus2d:AxB  triangular:AxB   (a single N means NxN)
///   cube3d:N            grid on {-N..N}^3
///   rrg:n=N,d=D,g=G,seed=S[,bipartite=0|1]
///   union:SPEC+SPEC+...
struct FamilySpec {
  Family family = Family::Path;
  std::size_t a = 1;
  std::size_t b = 1;
  // random_regular_girth
  std::size_t degree = 3;
  std::size_t girth = 3;
  std::uint64_t seed = 0;
  bool bipartite = false;  // true: pair across two sides; false: reject bipartite outcomes
  std::vector<FamilySpec> parts;  // disjoint_union

  void validate() const;
  std::string to_string() const;
  static FamilySpec parse(const std::string& text);

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline constexpr std::size_t kGirthRetryBudget = 10000;

/// Throws Error{InfeasibleSpec} for invalid sizes or when the girth target is
/// not reached within the retry budget.
Graph generate(const FamilySpec& spec);

struct FolnerElement {
  FamilySpec spec;
  Graph graph;
  /// Fraction of vertices having a neighbour outside the finite piece in the
  /// ambient infinite lattice.
  double boundary_ratio = 0.0;
};

/// Nested finite pieces of an infinite lattice: path, cycle (taken as arcs,
/// i.e. paths), grid2d, cube3d, triangular, ladder. `sizes` must be strictly
/// increasing; each size is the family's linear size parameter.
std::vector<FolnerElement> folner_sequence(const FamilySpec& family, std::span<const std::size_t> sizes);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace locascope
