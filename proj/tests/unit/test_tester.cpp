#include <doctest.h>

#include <cmath>

#include "locascope/error.hpp"
#include "locascope/generators.hpp"
#include "locascope/neighborhood.hpp"
#include "locascope/tester.hpp"

using namespace locascope;

namespace {

Graph fam(const std::string& s) { return generate(FamilySpec::parse(s)); }

std::vector<std::pair<std::string, Graph>> entries(std::initializer_list<const char*> specs) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const char* s : specs) out.emplace_back(s, fam(s));
  return out;
}

}  // namespace

TEST_CASE("sample_stats examples") {
  const auto y = sample_stats(fam("cycle:50"), 1, 10, 3);
  CHECK(y.k == 10);
  CHECK_FALSE(y.stats.exact());
  CHECK(y.stats.frequencies[1].size() == 1);
  CHECK(y.stats.frequencies[1].begin()->second == 1.0);

  const Graph g = fam("grid2d:12x9");
  const auto a = sample_stats(g, 2, 50, 11);
  const auto b = sample_stats(g, 2, 50, 11);
  CHECK(stats_distance(a.stats, b.stats) == 0.0);
  CHECK(a.stats.frequencies == b.stats.frequencies);
  CHECK_THROWS_AS(sample_stats(g, 2, 0, 1), Error);
}

TEST_CASE("endpoint mass on long paths") {
  const Graph p = fam("path:100");
  const auto exact = neighborhood_distribution(p, 1);
  std::string endpoint;
  for (const auto& [code, f] : exact.frequencies[1])
    if (f == 0.02) endpoint = code;
  REQUIRE_FALSE(endpoint.empty());
  int within = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto y = sample_stats(p, 1, 400, seed);
    within += std::abs(y.stats.frequency(1, endpoint) - 0.02) <= 0.05;
  }
  CHECK(within >= 190);
}

TEST_CASE("sampling is unbiased") {
  const Graph g = fam("grid2d:7x5");
  const auto exact = neighborhood_distribution(g, 1);
  const std::size_t k = 50, seeds = 200;
  std::map<std::string, double> mean;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    const auto y = sample_stats(g, 1, k, seed);
    for (const auto& [code, f] : y.stats.frequencies[1]) mean[code] += f / seeds;
  }
  for (const auto& [code, p] : exact.frequencies[1]) {
    const double tol = 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(seeds * k));
    CHECK(std::abs(mean[code] - p) <= tol);
  }
}

TEST_CASE("query counter") {
  const Graph g = fam("grid2d:30x30");
  CountingGraph counted(g);
  const auto y = sample_stats(counted, 2, 100, 5);
  CHECK(counted.accesses() <= 100 * y.max_ball_size);
  CHECK(counted.accesses() > 0);
  CHECK(y.max_ball_size <= 13);
}

TEST_CASE("database round trip and self test") {
  const auto db = build_database(entries({"cycle:40"}), 2, ParameterSpec::independence_ratio(), 0.1, 0.1);
  REQUIRE(db.entries.size() == 1);
  CHECK(db.entries[0].zeta == 0.5);
  const auto y = sample_stats(fam("cycle:40"), 2, 30, 1);
  const TestOutput t = run_tester(y, db);
  CHECK(t.value == 0.5);
  CHECK(t.label == "cycle:40");
  CHECK(t.distance == 0.0);
}

TEST_CASE("grid database values near one half") {
  const auto db = build_database(entries({"grid2d:10x10", "grid2d:20x20", "grid2d:40x40"}), 2,
                                 ParameterSpec::independence_ratio(), 0.1, 0.1);
  CHECK(db.entries.size() == 3);
  for (const auto& e : db.entries) CHECK(e.zeta == 0.5);
  const auto odd = build_database(entries({"grid2d:5x5"}), 1, ParameterSpec::independence_ratio(), 0.1, 0.1);
  CHECK(odd.entries[0].zeta == doctest::Approx(13.0 / 25));
}

TEST_CASE("database validation") {
  auto list = entries({"cycle:10", "cycle:10"});
  CHECK_THROWS_AS(build_database(list, 1, ParameterSpec::independence_ratio(), 0.1, 0.1), Error);
  CHECK_THROWS_AS(build_database(entries({"cycle:10"}), 1, ParameterSpec::independence_ratio(), 0.0, 0.1), Error);
  CHECK_THROWS_AS(build_database({}, 1, ParameterSpec::independence_ratio(), 0.1, 0.1), Error);
  CHECK_THROWS_AS(build_database(entries({"cycle:10"}), 1, ParameterSpec::spectral(), 0.1, 0.1), Error);
}

TEST_CASE("tester examples") {
  const auto db = build_database(entries({"cycle:1000", "grid2d:30x30"}), 2, ParameterSpec::independence_ratio(), 0.1,
                                 0.1);
  const TestOutput t = run_tester(sample_stats(fam("cycle:1001"), 2, 300, 4), db);
  CHECK(t.label == "cycle:1000");
  CHECK(t.value == 0.5);

  const auto grids = build_database(entries({"grid2d:10x10", "grid2d:20x20"}), 2, ParameterSpec::independence_ratio(),
                                    0.1, 0.1);
  try {
    run_tester(sample_stats(fam("rrg:n=200,d=3,g=5,seed=3"), 2, 300, 1), grids);
    FAIL("expected no match");
  } catch (const NoMatchError& e) {
    CHECK(e.best_distance() > 0.1);
    CHECK_FALSE(e.best_label().empty());
  }
  auto y = sample_stats(fam("cycle:30"), 1, 10, 1);
  CHECK_THROWS_AS(run_tester(y, db), Error);
}

TEST_CASE("ties go to the smallest label") {
  const auto db = build_database(entries({"cycle:12", "cycle:11"}), 1, ParameterSpec::independence_ratio(), 0.1, 0.1);
  const TestOutput t = run_tester(sample_stats(fam("cycle:50"), 1, 5, 2), db);
  CHECK(t.label == "cycle:11");
  CHECK(t.value == doctest::Approx(5.0 / 11));
}

TEST_CASE("large reference graphs fall back to estimation") {
  SolverLimits limits;
  limits.exact_cap = 20;
  const auto db = build_database(entries({"triangular:12x12"}), 1, ParameterSpec::independence_ratio(), 0.1, 1.0, 40,
                                 limits);
  // exact value is 1/3; removing edges can only raise the estimate
  CHECK(db.entries[0].zeta >= 1.0 / 3);
  CHECK(db.entries[0].zeta < 0.5);
}
