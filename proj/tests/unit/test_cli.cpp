#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "locascope/error.hpp"
#include "locascope/generators.hpp"
#include "locascope/graph_io.hpp"
#include "locascope_cli/commands.hpp"

using namespace locascope;
using cli::RunConfig;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("locascope_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary; returns the exit status.
int run(const std::string& args, const std::string& out, const std::string& err) {
  const std::string cmd = std::string(LOCASCOPE_CLI_PATH) + " " + args + " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("stats examples") {
  RunConfig c = config("stats");
  c.families = {"cycle:8"};
  c.radius = 1;
  const json j = json::parse(cli::run_command(c).output);
  CHECK(j["stats"]["1"].size() == 1);
  CHECK(j["stats"]["1"].begin().value() == 1.0);

  c.families = {"path:4"};
  c.format = cli::Format::Csv;
  const std::string csv = cli::run_command(c).output;
  CHECK(csv.find(",0.5\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header, radius 0, two radius-1 rows
}

TEST_CASE("estimate examples") {
  RunConfig c = config("estimate");
  c.families = {"cycle:1000"};
  c.delta = 0.04;
  json j = json::parse(cli::run_command(c).output);
  CHECK(j["value"].get<double>() == doctest::Approx(0.51).epsilon(0.02));
  CHECK(j["error_bound"].get<double>() == doctest::Approx(0.08));
  CHECK(j.contains("census"));
  CHECK(j["budget_exceeded"] == false);

  c.families = {"grid2d:20x20"};
  c.param = "dist_to:bipartite";
  c.delta = 0.2;
  j = json::parse(cli::run_command(c).output);
  CHECK(j["value"].get<double>() == 0.0);

  c.families = {"path:200"};
  c.param = "log_ind_partition";
  c.lambda = 1.0;
  c.delta = 0.02;
  j = json::parse(cli::run_command(c).output);
  CHECK(std::abs(j["value"].get<double>() - 0.481212) < 0.01);
}

TEST_CASE("counterexample report") {
  RunConfig c = config("counterexample");
  c.seeds = {3};
  const std::string first = cli::run_command(c).output;
  const json j = json::parse(first);
  CHECK(j["stats_distance"] == 0.0);
  CHECK(j["graphs"][0]["dist_to_bipartite"] == 0.0);
  CHECK(j["graphs"][1]["dist_to_bipartite"].get<double>() > 0.0);
  CHECK(cli::run_command(c).output == first);

  TempDir tmp;
  const std::string tree = tmp.file("tree.txt");
  write_file_atomic(tree, format_graph(generate(FamilySpec::parse("path:6"))));
  c.inputs = {tree, tree};
  CHECK_THROWS_AS(cli::run_command(c), Error);
}

TEST_CASE("generate round trip through the binary") {
  TempDir tmp;
  const std::string out = tmp.file("g.txt"), err = tmp.file("err");
  CHECK(run("generate --family grid2d:7x5 --out " + out, tmp.file("stdout"), err) == 0);
  CHECK(read_graph_file(out) == generate(FamilySpec::parse("grid2d:7x5")));
}

TEST_CASE("errors are machine readable") {
  TempDir tmp;
  const std::string bad = tmp.file("bad.txt");
  {
    std::ofstream f(bad);
    f << "4 2 3\n0 1\n1 q\n";
  }
  const std::string out = tmp.file("out"), err = tmp.file("err");
  CHECK(run("stats --input " + bad + " --radius 1", out, err) != 0);
  const json e = json::parse(slurp(err));
  CHECK(e["error"]["code"] == "ParseError");
  CHECK(e["error"]["message"].get<std::string>().find("line 3") != std::string::npos);

  CHECK(run("stats --family cycle:5", out, err) != 0);
  CHECK(json::parse(slurp(err))["error"]["code"] == "InvalidArgument");
  CHECK(run("frobnicate", out, err) == 2);
  CHECK(json::parse(slurp(err)).contains("error"));
}

TEST_CASE("database build and test through the binary") {
  TempDir tmp;
  const std::string db = tmp.file("db.json"), out = tmp.file("out"), err = tmp.file("err");
  REQUIRE(run("build-db --family grid2d:16x16 --family grid2d:32x32 --radius 2 --delta 0.1 --out " + db, out, err) ==
          0);
  const json d = json::parse(slurp(db));
  CHECK(d["radius"] == 2);
  CHECK(d["entries"].size() == 2);
  CHECK(d["param"]["name"] == "independence_ratio");

  REQUIRE(run("test --family grid2d:40x40 --db " + db + " --samples 500 --seed 4", out, err) == 0);
  const json t = json::parse(slurp(out));
  CHECK(t["value"] == 0.5);
  CHECK(t["graph_accesses"].get<std::size_t>() <= 500 * t["max_ball_size"].get<std::size_t>());

  CHECK(run("test --family rrg:n=100,d=3,g=5,seed=1 --db " + db + " --samples 200", out, err) == 3);
  CHECK(json::parse(slurp(err))["error"]["code"] == "NoMatchWithinTolerance");
}

TEST_CASE("ids and spectrum csv") {
  RunConfig c = config("ids");
  c.families = {"grid2d:1"};
  c.sizes = {6, 12};
  c.seeds = {1, 2};
  c.delta = 0.3;
  const std::string csv = cli::run_command(c).output;
  CHECK(csv.rfind("kind,graph_index,n,seed_a,seed_b,distance\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 + 2);

  RunConfig s = config("spectrum");
  s.families = {"cycle:4"};
  CHECK(cli::run_command(s).output == "lambda,value\n0,0.25\n2,0.75\n4,1\n");
}

TEST_CASE("decompose json") {
  RunConfig c = config("decompose");
  c.families = {"cycle:100"};
  c.delta = 0.5;
  c.r_cap = 10;
  const json j = json::parse(cli::run_command(c).output);
  CHECK(j["removed_edges"].size() <= 50);
  CHECK(j["components"].size() == j["removed_edges"].size());
}
