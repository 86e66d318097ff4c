#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locascope/combinatorics.hpp"
#include "locascope/graph.hpp"

namespace locascope {

/// Nondecreasing right-continuous step function with value 0 before the first
/// jump. values[i] is the function on [points[i], points[i+1]).
struct StepFunction {
  std::vector<double> points;
  std::vector<double> values;

  double operator()(double x) const;
  /// lim_{y -> x-} F(y)
  double left_limit(double x) const;
};

/// Dense symmetric eigenvalues (Householder reduction to tridiagonal form,
/// then implicit-shift QL). `matrix` is row-major n x n; only symmetry of the
/// input is assumed. Returns the eigenvalues ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Eigenvalues of D - A (+ diag(potential)) with multiplicity, ascending.
/// Throws Error{ComponentTooLarge} above limits.spectral_cap and
/// Error{InvalidArgument} when the potential length differs from |V|.
std::vector<double> laplacian_spectrum(const Graph& h, std::span<const double> potential = {},
                                       const SolverLimits& limits = {});

/// N(lambda) = #{eigenvalues <= lambda} / n.
StepFunction spectral_cdf(std::span<const double> eigenvalues, std::size_t n);

/// Pointwise mixture sum_i w_i F_i.
StepFunction mix(std::span<const std::pair<double, StepFunction>> parts);

/// sup_lambda |F1 - F2|, checking both one-sided limits at every jump.
double sup_distance(const StepFunction& a, const StepFunction& b);

/// sup_distance that ignores disagreements caused by jump locations moving by
/// at most `slack`: sup_x max(A(x - slack) - B(x + slack), B(x - slack) - A(x + slack), 0).
/// Used to compare numerically computed spectra.
double sup_distance_with_slack(const StepFunction& a, const StepFunction& b, double slack);

/// Finite-valued i.i.d. site potential.
struct PotentialSpec {
  std::vector<double> values;
  std::vector<double> probabilities;

  /// Throws Error{InvalidArgument} for mismatched lengths, negative
  /// probabilities or a total away from 1 by more than 1e-12.
  void validate() const;
  /// "0:0.5,1:0.5" (value:probability pairs). Throws Error{ParseError}.
  static PotentialSpec parse(const std::string& text);
  std::string to_string() const;
};

/// Draw for site i depends only on (seed, i), so prefixes agree across n.
std::vector<double> sample_potential(const PotentialSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace locascope
