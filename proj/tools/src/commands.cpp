#include "locascope_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "locascope/canonical.hpp"
#include "locascope/combinatorics.hpp"
#include "locascope/decompose.hpp"
#include "locascope/error.hpp"
#include "locascope/estimate.hpp"
#include "locascope/graph_io.hpp"
#include "locascope/json_io.hpp"
#include "locascope/neighborhood.hpp"
#include "locascope/spectral.hpp"
#include "locascope/tester.hpp"

namespace locascope::cli {
namespace {

std::string number(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

void require_format(const RunConfig& c, std::initializer_list<Format> allowed) {
  if (!c.format) return;
  for (Format f : allowed) {
    if (f == *c.format) return;
  }
  throw Error(ErrorCode::InvalidArgument, "format not supported by '" + c.command + "'");
}

std::size_t need_radius(const RunConfig& c) {
  if (!c.radius) throw Error(ErrorCode::InvalidArgument, "--radius is required for '" + c.command + "'");
  return *c.radius;
}

ParameterSpec parameter(const RunConfig& c) {
  ParameterSpec spec = ParameterSpec::parse(c.param);
  if (c.lambda) {
    if (spec.kind != ParameterKind::LogIndPartition && spec.kind != ParameterKind::LogMatchPartition) {
      throw Error(ErrorCode::InvalidArgument, "--lambda only applies to log-partition parameters");
    }
    spec.lambda = *c.lambda;
  }
  if (spec.kind == ParameterKind::SpectralCdf && !c.potential.empty()) {
    spec.potential = PotentialSpec::parse(c.potential);
    spec.seed = c.seeds.empty() ? 0 : c.seeds.front();
  }
  spec.validate();
  return spec;
}

CommandResult cmd_generate(const RunConfig& c) {
  require_format(c, {Format::Text});
  if (c.families.size() != 1) throw Error(ErrorCode::InvalidArgument, "generate needs exactly one --family");
  return {format_graph(generate(FamilySpec::parse(c.families.front())))};
}

CommandResult cmd_stats(const RunConfig& c) {
  require_format(c, {Format::Json, Format::Csv});
  const Graph g = load_graph(c);
  const auto d = neighborhood_distribution(g, need_radius(c));
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string out = "radius,code,frequency\n";
    for (std::size_t s = 0; s < d.frequencies.size(); ++s) {
      for (const auto& [code, freq] : d.frequencies[s]) {
        out += std::to_string(s) + "," + to_hex(code) + "," + number(freq) + "\n";
      }
    }
    return {out};
  }
  return {dump(Json{{"radius", d.radius}, {"num_vertices", g.num_vertices()}, {"stats", stats_to_json(d)}})};
}

CommandResult cmd_decompose(const RunConfig& c) {
  require_format(c, {Format::Json});
  const Graph g = load_graph(c);
  const auto d = hyperfinite_decompose(g, c.delta, c.r_cap);
  return {dump(decomposition_to_json(d, component_census(d)))};
}

CommandResult cmd_estimate(const RunConfig& c) {
  require_format(c, {Format::Json, Format::Csv});
  const Graph g = load_graph(c);
  const ParameterSpec spec = parameter(c);
  const Estimate e = estimate_parameter(g, c.delta, c.r_cap, spec);
  if (format_or(c, Format::Json) == Format::Csv) {
    if (!e.cdf) throw Error(ErrorCode::InvalidArgument, "csv output is only available for spectral_cdf");
    return {step_function_to_csv(*e.cdf)};
  }
  return {dump(estimate_to_json(e, spec))};
}

CommandResult cmd_spectrum(const RunConfig& c) {
  require_format(c, {Format::Json, Format::Csv});
  const Graph g = load_graph(c);
  RunConfig spectral = c;
  spectral.param = "spectral_cdf";
  const StepFunction cdf = exact_spectral_cdf(g, parameter(spectral));
  if (format_or(c, Format::Csv) == Format::Csv) return {step_function_to_csv(cdf)};
  return {dump(Json{{"num_vertices", g.num_vertices()}, {"cdf", step_function_to_json(cdf)}})};
}

CommandResult cmd_build_db(const RunConfig& c) {
  require_format(c, {Format::Json});
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& f : c.families) graphs.emplace_back(f, generate(FamilySpec::parse(f)));
  for (const auto& path : c.inputs) graphs.emplace_back(path, read_graph_file(path));
  if (graphs.empty()) throw Error(ErrorCode::InvalidArgument, "build-db needs at least one --family or --input");
  const auto db = build_database(graphs, need_radius(c), parameter(c), c.delta, c.delta_solve, c.r_cap);
  return {dump(database_to_json(db))};
}

TesterDatabase load_database(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--db is required");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open database " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, path + ": " + ex.what());
  }
  return database_from_json(j);
}

CommandResult cmd_test(const RunConfig& c) {
  require_format(c, {Format::Json});
  const Graph g = load_graph(c);
  const TesterDatabase db = load_database(c.db);
  if (c.radius && *c.radius != db.radius) {
    throw Error(ErrorCode::RadiusMismatch, "--radius differs from the database radius");
  }
  const std::uint64_t seed = c.seeds.empty() ? 0 : c.seeds.front();
  CountingGraph counted(g);
  const auto y = sample_stats(counted, db.radius, c.samples, seed);
  const TestOutput t = run_tester(y, db);
  return {dump(Json{{"value", t.value},
                    {"label", t.label},
                    {"distance", t.distance},
                    {"samples", c.samples},
                    {"seed", seed},
                    {"graph_accesses", counted.accesses()},
                    {"max_ball_size", y.max_ball_size}})};
}

CommandResult cmd_ids(const RunConfig& c) {
  require_format(c, {Format::Csv});
  if (c.families.size() != 1) throw Error(ErrorCode::InvalidArgument, "ids needs exactly one --family");
  if (c.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "ids needs --sizes");
  const auto elements = folner_sequence(FamilySpec::parse(c.families.front()), c.sizes);
  std::vector<Graph> graphs;
  for (const auto& e : elements) graphs.push_back(e.graph);
  const PotentialSpec potential = PotentialSpec::parse(c.potential.empty() ? "0:0.5,1:0.5" : c.potential);
  return {ids_report_to_csv(ids_experiment(graphs, potential, c.delta, c.r_cap, c.seeds))};
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return g.num_vertices() > 0;
}

// Two cubic graphs: given as two --input files, or generated with large girth
// (first bipartite, then non-bipartite).
std::vector<std::pair<std::string, Graph>> counterexample_pair(const RunConfig& c, std::uint64_t seed) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!c.inputs.empty()) {
    if (c.inputs.size() != 2) throw Error(ErrorCode::InvalidArgument, "counterexample takes two --input graphs");
    for (const auto& path : c.inputs) out.emplace_back(path, read_graph_file(path));
  } else {
    for (bool bipartite : {true, false}) {
      FamilySpec spec;
      spec.family = Family::RandomRegularGirth;
      spec.a = c.n;
      spec.degree = 3;
      spec.girth = c.girth;
      spec.seed = seed;
      spec.bipartite = bipartite;
      out.emplace_back(spec.to_string(), generate(spec));
    }
  }
  for (const auto& [label, g] : out) {
    if (!is_cubic(g)) throw Error(ErrorCode::InfeasibleSpec, label + " is not cubic");
  }
  return out;
}

CommandResult cmd_counterexample(const RunConfig& c) {
  require_format(c, {Format::Json});
  const std::size_t r = c.radius.value_or(1);
  const std::uint64_t seed = c.seeds.empty() ? 0 : c.seeds.front();
  const auto pair = counterexample_pair(c, seed);
  Json members = Json::array();
  std::vector<double> dist;
  for (const auto& [label, g] : pair) {
    SolverLimits limits;
    limits.coloring_cap = std::max(limits.coloring_cap, g.num_vertices());
    const std::size_t deletions = edges_to_property(g, PropertyTag::bipartite(), limits);
    dist.push_back(static_cast<double>(deletions) / static_cast<double>(g.num_vertices()));
    const auto gi = girth(g);
    members.push_back({{"graph", label},
                       {"num_vertices", g.num_vertices()},
                       {"girth", gi ? Json(*gi) : Json(nullptr)},
                       {"bipartite", is_bipartite(g)},
                       {"edges_to_bipartite", deletions},
                       {"dist_to_bipartite", dist.back()}});
  }
  const double distance =
      stats_distance(neighborhood_distribution(pair[0].second, r), neighborhood_distribution(pair[1].second, r));
  return {dump(Json{{"radius", r},
                    {"stats_distance", distance},
                    {"graphs", members},
                    {"dist_gap", std::abs(dist[1] - dist[0])}})};
}

}  // namespace

std::string error_json(const std::string& code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}}.dump() + "\n";
}

Graph load_graph(const RunConfig& c) {
  if (c.inputs.size() + c.families.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "'" + c.command + "' needs exactly one --input or --family");
  }
  if (!c.inputs.empty()) return read_graph_file(c.inputs.front());
  return generate(FamilySpec::parse(c.families.front()));
}

CommandResult run_command(const RunConfig& c) {
  if (c.command == "generate") return cmd_generate(c);
  if (c.command == "stats") return cmd_stats(c);
  if (c.command == "decompose") return cmd_decompose(c);
  if (c.command == "estimate") return cmd_estimate(c);
  if (c.command == "spectrum") return cmd_spectrum(c);
  if (c.command == "build-db") return cmd_build_db(c);
  if (c.command == "test") return cmd_test(c);
  if (c.command == "ids") return cmd_ids(c);
  if (c.command == "counterexample") return cmd_counterexample(c);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + c.command + "'");
}

}  // namespace locascope::cli
