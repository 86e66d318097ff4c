#include "locascope/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locascope/error.hpp"
#include "locascope/parallel.hpp"

namespace locascope {
namespace {

template <class T>
void check_weights(std::span<const std::pair<double, T>> weighted) {
  double total = 0.0;
  for (const auto& [w, value] : weighted) {
    if (!(w >= 0.0)) throw Error(ErrorCode::WeightsNotNormalized, "aggregation weight is negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "aggregation weights sum to " << total;
    throw Error(ErrorCode::WeightsNotNormalized, msg.str());
  }
}

double parse_lambda(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad lambda '" + text + "'");
  }
}

std::string format_number(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

double ParameterSpec::penalty() const {
  switch (kind) {
    case ParameterKind::LogIndPartition:
    case ParameterKind::LogMatchPartition:
      return std::log(std::max(1.0, lambda)) + 2.0;
    case ParameterKind::SpectralCdf:
      return 2.0;
    default:
      return 1.0;
  }
}

void ParameterSpec::validate() const {
  if ((kind == ParameterKind::LogIndPartition || kind == ParameterKind::LogMatchPartition) && !(lambda > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  }
  if (kind == ParameterKind::SpectralCdf && potential) potential->validate();
}

std::string ParameterSpec::name() const {
  switch (kind) {
    case ParameterKind::IndependenceRatio: return "independence_ratio";
    case ParameterKind::MatchingRatio: return "matching_ratio";
    case ParameterKind::LogIndPartition: return "log_ind_partition:" + format_number(lambda);
    case ParameterKind::LogMatchPartition: return "log_match_partition:" + format_number(lambda);
    case ParameterKind::DistTo: return "dist_to:" + property.name();
    case ParameterKind::SpectralCdf: return "spectral_cdf";
  }
  return "unknown";
}

ParameterSpec ParameterSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  ParameterSpec spec;
  if (head == "independence_ratio") {
    spec = independence_ratio();
  } else if (head == "matching_ratio") {
    spec = matching_ratio();
  } else if (head == "log_ind_partition") {
    spec = log_ind_partition(arg.empty() ? 1.0 : parse_lambda(arg));
  } else if (head == "log_match_partition") {
    spec = log_match_partition(arg.empty() ? 1.0 : parse_lambda(arg));
  } else if (head == "dist_to") {
    spec = dist_to(PropertyTag::parse(arg.empty() ? "bipartite" : arg));
  } else if (head == "spectral_cdf") {
    spec = spectral();
  } else {
    throw Error(ErrorCode::ParseError, "unknown parameter '" + text + "'");
  }
  spec.validate();
  return spec;
}

double aggregate(std::span<const std::pair<double, double>> weighted) {
  check_weights(weighted);
  double sum = 0.0;
  for (const auto& [w, value] : weighted) sum += w * value;
  return sum;
}

StepFunction aggregate(std::span<const std::pair<double, StepFunction>> weighted) {
  check_weights(weighted);
  return mix(weighted);
}

double component_value(const Graph& h, const ParameterSpec& spec, const SolverLimits& limits) {
  const auto n = static_cast<double>(h.num_vertices());
  if (h.num_vertices() == 0) return 0.0;
  switch (spec.kind) {
    case ParameterKind::IndependenceRatio:
      return static_cast<double>(max_independent_set(h, limits).size()) / n;
    case ParameterKind::MatchingRatio:
      return static_cast<double>(max_matching(h).size()) / n;
    case ParameterKind::LogIndPartition:
      return eval_log_partition(independence_polynomial(h, limits), spec.lambda) / n;
    case ParameterKind::LogMatchPartition:
      return eval_log_partition(matching_polynomial(h, limits), spec.lambda) / n;
    case ParameterKind::DistTo:
      return dist_to_property(h, spec.property, limits);
    case ParameterKind::SpectralCdf:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "spectral_cdf has no scalar component value");
}

Estimate estimate_parameter(const Graph& g, double delta, std::size_t r_cap, const ParameterSpec& spec,
                            const SolverLimits& limits) {
  spec.validate();
  const Decomposition d = hyperfinite_decompose(g, delta, r_cap);
  Estimate est;
  est.census = component_census(d);
  est.delta_used = delta;
  est.budget_exceeded = d.budget_exceeded;
  est.removed_edges = d.removed_edges.size();
  est.k_observed = d.k_observed;
  est.num_vertices = g.num_vertices();
  est.error_bound = delta * static_cast<double>(g.degree_bound()) * spec.penalty();
  if (g.num_vertices() == 0) {
    if (spec.kind == ParameterKind::SpectralCdf) est.cdf = StepFunction{};
    return est;
  }
  const auto& classes = est.census.classes;

  if (spec.kind == ParameterKind::SpectralCdf) {
    std::vector<std::pair<double, StepFunction>> parts;
    if (!spec.potential) {
      parts.resize(classes.size());
      parallel_for(classes.size(), [&](std::size_t i) {
        const Graph& h = classes[i].representative;
        parts[i] = {est.census.fraction(i), spectral_cdf(laplacian_spectrum(h, {}, limits), h.num_vertices())};
      });
    } else {
      // A potential breaks the isomorphism symmetry, so every component is
      // solved with its own restriction of the single draw on G.
      const auto omega = sample_potential(*spec.potential, g.num_vertices(), spec.seed);
      parts.resize(d.components.size());
      parallel_for(d.components.size(), [&](std::size_t i) {
        const Component& c = d.components[i];
        std::vector<double> local(c.vertices.size());
        for (std::size_t j = 0; j < local.size(); ++j) local[j] = omega[c.vertices[j]];
        parts[i] = {static_cast<double>(c.vertices.size()) / static_cast<double>(g.num_vertices()),
                    spectral_cdf(laplacian_spectrum(c.graph, local, limits), c.vertices.size())};
      });
    }
    est.cdf = aggregate(std::span<const std::pair<double, StepFunction>>(parts));
    return est;
  }

  std::vector<std::pair<double, double>> parts(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) {
    parts[i] = {est.census.fraction(i), component_value(classes[i].representative, spec, limits)};
  });
  est.value = aggregate(std::span<const std::pair<double, double>>(parts));
  return est;
}

double exact_parameter(const Graph& g, const ParameterSpec& spec, const SolverLimits& limits) {
  spec.validate();
  if (g.num_vertices() == 0) return 0.0;
  std::vector<std::pair<double, double>> parts;
  for (const auto& vertices : connected_components(g)) {
    const Graph h = induced_subgraph(g, vertices);
    parts.emplace_back(static_cast<double>(vertices.size()) / static_cast<double>(g.num_vertices()),
                       component_value(h, spec, limits));
  }
  return aggregate(std::span<const std::pair<double, double>>(parts));
}

StepFunction exact_spectral_cdf(const Graph& g, const ParameterSpec& spec, const SolverLimits& limits) {
  spec.validate();
  std::vector<double> omega;
  if (spec.potential) omega = sample_potential(*spec.potential, g.num_vertices(), spec.seed);
  return spectral_cdf(laplacian_spectrum(g, omega, limits), g.num_vertices());
}

ApproxIndependentSet approx_max_independent_set(const Graph& g, double delta, std::size_t r_cap,
                                                const SolverLimits& limits) {
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1]");
  const Decomposition d = hyperfinite_decompose(g, delta / 2.0, r_cap);
  std::vector<bool> touched(g.num_vertices(), false);
  for (auto [u, v] : d.removed_edges) touched[u] = touched[v] = true;
  std::vector<std::vector<Vertex>> per_component(d.components.size());
  parallel_for(d.components.size(), [&](std::size_t i) {
    for (Vertex local : max_independent_set(d.components[i].graph, limits)) {
      per_component[i].push_back(d.components[i].vertices[local]);
    }
  });
  ApproxIndependentSet out;
  out.budget_exceeded = d.budget_exceeded;
  out.removed_edges = d.removed_edges.size();
  for (const auto& part : per_component) {
    for (Vertex v : part) {
      if (!touched[v]) out.vertices.push_back(v);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

IdsReport ids_experiment(std::span<const Graph> sequence, const PotentialSpec& potential, double delta,
                         std::size_t r_cap, std::span<const std::uint64_t> seeds, const SolverLimits& limits) {
  if (sequence.empty()) throw Error(ErrorCode::InvalidArgument, "ids experiment needs at least one graph");
  if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "ids experiment needs at least one seed");
  IdsReport report;
  report.cdfs.resize(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::uint64_t seed : seeds) {
      auto est = estimate_parameter(sequence[i], delta, r_cap, ParameterSpec::spectral(potential, seed), limits);
      report.cdfs[i].push_back(std::move(*est.cdf));
    }
  }
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = 0; j + 1 < seeds.size(); ++j) {
      report.rows.push_back({IdsRow::Kind::CrossSeed, i, sequence[i].num_vertices(), seeds[j], seeds[j + 1],
                             sup_distance(report.cdfs[i][j], report.cdfs[i][j + 1])});
    }
  }
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      report.rows.push_back({IdsRow::Kind::Consecutive, i, sequence[i].num_vertices(), seeds[j], seeds[j],
                             sup_distance(report.cdfs[i][j], report.cdfs[i + 1][j])});
    }
  }
  return report;
}

}  // namespace locascope
