#include <doctest.h>

#include <random>

#include "locascope/ball.hpp"
#include "locascope/canonical.hpp"
#include "locascope/error.hpp"
#include "locascope/generators.hpp"
#include "locascope/neighborhood.hpp"
#include "oracles.hpp"

using namespace locascope;

namespace {

Graph fam(const std::string& s) { return generate(FamilySpec::parse(s)); }

double sum(const std::map<std::string, double>& m) {
  double t = 0;
  for (const auto& [k, v] : m) t += v;
  return t;
}

}  // namespace

TEST_CASE("distribution examples") {
  const auto c = neighborhood_distribution(fam("cycle:12"), 1);
  CHECK(c.exact());
  REQUIRE(c.frequencies.size() == 2);
  CHECK(c.frequencies[1].size() == 1);
  CHECK(c.frequencies[1].begin()->second == 1.0);

  const auto p = neighborhood_distribution(fam("path:4"), 1);
  REQUIRE(p.frequencies[1].size() == 2);
  for (const auto& [code, f] : p.frequencies[1]) CHECK(f == 0.5);

  const Graph empty = build_graph(7, {}, 2);
  const auto e = neighborhood_distribution(empty, 3);
  for (const auto& level : e.frequencies) {
    CHECK(level.size() == 1);
    CHECK(level.begin()->second == 1.0);
  }
}

TEST_CASE("stats_distance examples") {
  const auto c100 = neighborhood_distribution(fam("cycle:100"), 1);
  const auto c101 = neighborhood_distribution(fam("cycle:101"), 1);
  CHECK(stats_distance(c100, c100) == 0.0);
  CHECK(stats_distance(c100, c101) == 0.0);
  const auto c6 = neighborhood_distribution(fam("cycle:6"), 1);
  const auto p6 = neighborhood_distribution(fam("path:6"), 1);
  CHECK(stats_distance(c6, p6) == doctest::Approx(2.0 / 6));
  CHECK_THROWS_AS(stats_distance(c6, neighborhood_distribution(fam("cycle:6"), 2)), Error);
}

TEST_CASE("frequencies match brute-force class counting") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_connected(14, 3, 6, rng);
    const std::size_t r = 2;
    const auto d = neighborhood_distribution(g, r);
    for (std::size_t s = 0; s <= r; ++s) {
      CHECK(sum(d.frequencies[s]) == doctest::Approx(1.0).epsilon(1e-12));
      // group vertices by brute-force rooted isomorphism of their s-balls
      std::vector<RootedBall> balls;
      for (Vertex v = 0; v < g.num_vertices(); ++v) balls.push_back(ball(g, v, s));
      std::vector<int> cls(balls.size(), -1);
      int classes = 0;
      for (std::size_t i = 0; i < balls.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes;
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
          if (cls[j] < 0 && balls[j].size() <= 9 && balls[i].size() == balls[j].size() &&
              oracle::isomorphic(balls[i].graph, balls[j].graph, RootedBall::root, RootedBall::root)) {
            cls[j] = classes;
          }
        }
        ++classes;
      }
      bool small = true;
      for (const auto& b : balls) small = small && b.size() <= 9;
      if (small) CHECK(d.frequencies[s].size() == static_cast<std::size_t>(classes));
    }
  }
}

TEST_CASE("stats_distance is a pseudometric") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = neighborhood_distribution(oracle::random_connected(20, 3, 5, rng), 2);
    const auto b = neighborhood_distribution(oracle::random_connected(20, 3, 5, rng), 2);
    const auto c = neighborhood_distribution(oracle::random_connected(25, 3, 8, rng), 2);
    CHECK(stats_distance(a, a) == 0.0);
    CHECK(stats_distance(a, b) == stats_distance(b, a));
    CHECK(stats_distance(a, c) <= stats_distance(a, b) + stats_distance(b, c) + 1e-15);
  }
}

TEST_CASE("exact counts scale to n") {
  const Graph g = fam("grid2d:9x7");
  const auto d = neighborhood_distribution(g, 2);
  for (std::size_t s = 0; s <= 2; ++s) {
    std::uint64_t total = 0;
    for (const auto& [code, c] : d.counts[s]) total += c;
    CHECK(total == g.num_vertices());
  }
}
