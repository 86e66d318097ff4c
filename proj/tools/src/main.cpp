#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "locascope/error.hpp"
#include "locascope/graph_io.hpp"
#include "locascope_cli/commands.hpp"

using locascope::cli::Format;
using locascope::cli::RunConfig;

namespace {

const char* kFamilyHelp =
    "Graph family: path:N cycle:N ladder:N grid2d:AxB torus2d:AxB triangular:AxB cube3d:N "
    "rrg:n=N,d=D,g=G,seed=S[,bipartite=0|1] union:SPEC+SPEC";

const char* kParamHelp =
    "independence_ratio | matching_ratio | log_ind_partition[:L] | log_match_partition[:L] | "
    "dist_to:{bipartite,forest,triangle_free,k_colorable(K)} | spectral_cdf";

struct Flags {
  bool source = false;
  bool radius = false;
  bool samples = false;
  bool delta = false;
  bool solve = false;
  bool param = false;
  bool potential = false;
  bool seeds = false;
  bool db = false;
  bool sizes = false;
  bool counter = false;
};

CLI::App* add_command(CLI::App& app, RunConfig& cfg, const std::string& name, const std::string& help,
                      const Flags& f) {
  CLI::App* sub = app.add_subcommand(name, help);
  if (f.source) {
    sub->add_option("--input,-i", cfg.inputs, "Graph file (\"n m d\" header, then edges)");
    sub->add_option("--family,-f", cfg.families, kFamilyHelp);
  }
  if (f.radius) sub->add_option("--radius,-r", cfg.radius, "Ball radius");
  if (f.samples) sub->add_option("--samples,-k", cfg.samples, "Sampled roots")->check(CLI::PositiveNumber);
  if (f.delta) {
    sub->add_option("--delta", cfg.delta, "Per-vertex edge budget (match tolerance for build-db)");
    sub->add_option("--rcap", cfg.r_cap, "Largest ball radius tried by the decomposer")->check(CLI::PositiveNumber);
  }
  if (f.solve) sub->add_option("--delta-solve", cfg.delta_solve, "Budget for estimated database values");
  if (f.param) {
    sub->add_option("--param,-p", cfg.param, kParamHelp);
    sub->add_option("--lambda", cfg.lambda, "Activity for log-partition parameters");
  }
  if (f.potential) sub->add_option("--potential", cfg.potential, "Site potential, e.g. 0:0.5,1:0.5");
  if (f.seeds) sub->add_option("--seed,--seeds,-s", cfg.seeds, "Seed(s)")->delimiter(',');
  if (f.db) sub->add_option("--db", cfg.db, "Tester database file");
  if (f.sizes) sub->add_option("--sizes", cfg.sizes, "Linear sizes of the sequence")->delimiter(',');
  if (f.counter) {
    sub->add_option("--n", cfg.n, "Vertices per cubic graph");
    sub->add_option("--girth", cfg.girth, "Girth target");
  }
  sub->add_option("--out,-o", cfg.out, "Output file (stdout if omitted)");
  sub->add_option("--format", cfg.format, "json | csv | text")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}}));
  sub->callback([&cfg, name] { cfg.command = name; });
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local statistics, decompositions and parameter estimates for bounded-degree graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  add_command(app, cfg, "generate", "Write a generated graph in the text format", {.source = true});
  add_command(app, cfg, "stats", "Exact ball-class frequencies", {.source = true, .radius = true});
  add_command(app, cfg, "decompose", "Low-cut ball decomposition and component census",
              {.source = true, .delta = true});
  add_command(app, cfg, "estimate", "Decompose, solve per class, aggregate",
              {.source = true, .delta = true, .param = true, .potential = true, .seeds = true});
  add_command(app, cfg, "spectrum", "Exact Laplacian spectral distribution",
              {.source = true, .potential = true, .seeds = true});
  add_command(app, cfg, "build-db", "Reference database for the sampling tester",
              {.source = true, .radius = true, .delta = true, .solve = true, .param = true});
  add_command(app, cfg, "test", "Run the sampling tester against a database",
              {.source = true, .radius = true, .samples = true, .seeds = true, .db = true});
  add_command(app, cfg, "ids", "Spectral CDF convergence across sizes and seeds",
              {.source = true, .delta = true, .potential = true, .seeds = true, .sizes = true});
  add_command(app, cfg, "counterexample", "Equal local statistics, different distance to bipartite",
              {.source = true, .radius = true, .seeds = true, .counter = true});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << locascope::cli::error_json("UsageError", e.what());
    return 2;
  }

  try {
    const auto result = locascope::cli::run_command(cfg);
    if (cfg.out.empty()) {
      std::cout << result.output;
    } else {
      locascope::write_file_atomic(cfg.out, result.output);
    }
    return result.exit_code;
  } catch (const locascope::NoMatchError& e) {
    std::cerr << locascope::cli::error_json(std::string(locascope::to_string(e.code())), e.what());
    return 3;
  } catch (const locascope::Error& e) {
    std::cerr << locascope::cli::error_json(std::string(locascope::to_string(e.code())), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cerr << locascope::cli::error_json("Internal", e.what());
    return 1;
  }
}
