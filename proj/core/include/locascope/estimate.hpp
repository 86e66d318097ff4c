#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locascope/combinatorics.hpp"
#include "locascope/decompose.hpp"
#include "locascope/graph.hpp"
#include "locascope/spectral.hpp"

namespace locascope {

enum class ParameterKind {
  IndependenceRatio,
  MatchingRatio,
  LogIndPartition,
  LogMatchPartition,
  DistTo,
  SpectralCdf,
};

struct ParameterSpec {
  ParameterKind kind = ParameterKind::IndependenceRatio;
  double lambda = 1.0;                     // log-partition kinds
  PropertyTag property;                    // DistTo
  std::optional<PotentialSpec> potential;  // SpectralCdf
  std::uint64_t seed = 0;                  // SpectralCdf with potential

  static ParameterSpec independence_ratio() { return {}; }
  static ParameterSpec matching_ratio() { return with_kind(ParameterKind::MatchingRatio); }
  static ParameterSpec log_ind_partition(double lambda) {
    auto p = with_kind(ParameterKind::LogIndPartition);
    p.lambda = lambda;
    return p;
  }
  static ParameterSpec log_match_partition(double lambda) {
    auto p = with_kind(ParameterKind::LogMatchPartition);
    p.lambda = lambda;
    return p;
  }
  static ParameterSpec dist_to(PropertyTag property) {
    auto p = with_kind(ParameterKind::DistTo);
    p.property = property;
    return p;
  }
  static ParameterSpec spectral(std::optional<PotentialSpec> potential = std::nullopt, std::uint64_t seed = 0) {
    auto p = with_kind(ParameterKind::SpectralCdf);
    p.potential = std::move(potential);
    p.seed = seed;
    return p;
  }
  static ParameterSpec with_kind(ParameterKind kind) {
    ParameterSpec p;
    p.kind = kind;
    return p;
  }

  /// Multiplier of delta * d in the error bound.
  double penalty() const;
  void validate() const;

  /// Compact form used on the command line and in database files:
  /// independence_ratio, matching_ratio, log_ind_partition:<lambda>,
  /// log_match_partition:<lambda>, dist_to:<property>, spectral_cdf.
  std::string name() const;
  static ParameterSpec parse(const std::string& text);
};

struct Estimate {
  double value = 0.0;                // scalar kinds
  std::optional<StepFunction> cdf;   // SpectralCdf
  double error_bound = 0.0;
  Census census;
  double delta_used = 0.0;
  bool budget_exceeded = false;
  std::size_t removed_edges = 0;
  std::size_t k_observed = 0;
  std::size_t num_vertices = 0;
};

/// sum_i w_i v_i. Weights must be nonnegative and sum to 1 within 1e-9,
/// otherwise Error{WeightsNotNormalized}.
double aggregate(std::span<const std::pair<double, double>> weighted);
StepFunction aggregate(std::span<const std::pair<double, StepFunction>> weighted);

/// Per-vertex value of a scalar parameter on one (small) graph: I/|V|, M/|V|,
/// log(pi)/|V| or the edit distance.
double component_value(const Graph& h, const ParameterSpec& spec, const SolverLimits& limits = {});

/// Decompose, solve each component class once, aggregate by census weight.
/// Component-size failures surface as Error{ComponentTooLarge}.
Estimate estimate_parameter(const Graph& g, double delta, std::size_t r_cap, const ParameterSpec& spec,
                            const SolverLimits& limits = {});

/// The parameter of G itself, solved exactly over its connected components
/// (no edges removed).
double exact_parameter(const Graph& g, const ParameterSpec& spec, const SolverLimits& limits = {});
StepFunction exact_spectral_cdf(const Graph& g, const ParameterSpec& spec, const SolverLimits& limits = {});

struct ApproxIndependentSet {
  std::vector<Vertex> vertices;  // sorted, independent in G
  bool budget_exceeded = false;
  std::size_t removed_edges = 0;
};

/// Decompose with per-vertex budget delta/2, take an exact maximum independent
/// set per component, and drop every vertex touching a removed edge. When the
/// budget holds the result has at least I(G) - delta * |V| vertices.
ApproxIndependentSet approx_max_independent_set(const Graph& g, double delta, std::size_t r_cap,
                                                const SolverLimits& limits = {});

struct IdsRow {
  enum class Kind { Consecutive, CrossSeed };
  Kind kind = Kind::Consecutive;
  std::size_t graph_index = 0;  // for Consecutive: graphs graph_index and graph_index + 1
  std::size_t num_vertices = 0;
  std::uint64_t seed_a = 0;
  std::uint64_t seed_b = 0;
  double distance = 0.0;
};

struct IdsReport {
  std::vector<IdsRow> rows;
  /// cdfs[i][j]: estimated CDF of graph i under seeds[j].
  std::vector<std::vector<StepFunction>> cdfs;
};

/// Spectral CDF per (graph, seed); reports sup distances between consecutive
/// graphs under the same seed and between consecutive seeds on the same graph.
IdsReport ids_experiment(std::span<const Graph> sequence, const PotentialSpec& potential, double delta,
                         std::size_t r_cap, std::span<const std::uint64_t> seeds, const SolverLimits& limits = {});

}  // namespace locascope
