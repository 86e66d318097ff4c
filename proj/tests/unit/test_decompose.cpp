#include <doctest.h>

#include <random>
#include <set>

#include "locascope/ball.hpp"
#include "locascope/canonical.hpp"
#include "locascope/decompose.hpp"
#include "locascope/error.hpp"
#include "locascope/generators.hpp"
#include "oracles.hpp"

using namespace locascope;

namespace {

Graph fam(const std::string& s) { return generate(FamilySpec::parse(s)); }

// Partition soundness, cut accounting and the budget certificate.
void check_contract(const Graph& g, const Decomposition& d) {
  std::vector<int> owner(g.num_vertices(), -1);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
    largest = std::max(largest, c.vertices.size());
    for (Vertex v : c.vertices) {
      CHECK(owner[v] == -1);
      owner[v] = static_cast<int>(i);
    }
    CHECK(c.graph == induced_subgraph(remove_edges(g, d.removed_edges), c.vertices));
    CHECK(is_connected(c.graph));
  }
  for (int o : owner) CHECK(o >= 0);
  const std::set<Edge> removed(d.removed_edges.begin(), d.removed_edges.end());
  CHECK(removed.size() == d.removed_edges.size());
  for (auto [u, v] : g.edges()) CHECK((owner[u] == owner[v]) != (removed.count({u, v}) == 1));
  for (auto e : d.removed_edges) CHECK(g.has_edge(e.first, e.second));
  CHECK(d.k_observed == largest);
  if (!d.budget_exceeded) {
    CHECK(static_cast<double>(d.removed_edges.size()) <= d.delta_used * static_cast<double>(g.num_vertices()) + 1e-9);
  }
}

std::size_t brute_cut(const Graph& g, const RootedBall& b) {
  std::set<Vertex> in(b.host_ids.begin(), b.host_ids.end());
  std::size_t cut = 0;
  for (auto [u, v] : g.edges()) cut += in.count(u) != in.count(v);
  return cut;
}

}  // namespace

TEST_CASE("folner_radius examples") {
  const Graph c100 = fam("cycle:100");
  for (Vertex v : {0u, 37u, 99u}) CHECK(folner_radius(c100, v, 0.5, 10) == std::optional<std::size_t>(2));
  const Graph iso = build_graph(1, {}, 1);
  CHECK(folner_radius(iso, 0, 0.01, 1) == std::optional<std::size_t>(0));
  const Graph expander = fam("rrg:n=2000,d=3,g=5,seed=4");
  int none = 0;
  for (Vertex v = 0; v < 20; ++v) none += !folner_radius(expander, v, 0.05, 3).has_value();
  CHECK(none == 20);
}

TEST_CASE("folner_radius is minimal by brute force") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(40, 3, 4, rng);
    for (double delta : {0.1, 0.3, 0.6}) {
      const Vertex v = static_cast<Vertex>(rng() % 40);
      const auto r = folner_radius(g, v, delta, 12);
      std::optional<std::size_t> expected;
      for (std::size_t s = 0; s <= 12 && !expected; ++s) {
        const RootedBall b = ball(g, v, s);
        if (static_cast<double>(brute_cut(g, b)) <= delta * static_cast<double>(b.size())) expected = s;
      }
      CHECK(r == expected);
    }
  }
}

TEST_CASE("small components are left alone") {
  const std::vector<Graph> parts{fam("path:3"), fam("path:2"), fam("cycle:3"), build_graph(1, {}, 1)};
  const Graph g = disjoint_union(parts);
  const auto d = hyperfinite_decompose(g, 0.1);
  CHECK(d.removed_edges.empty());
  CHECK(d.components.size() == 4);
  CHECK_FALSE(d.budget_exceeded);
  check_contract(g, d);
}

TEST_CASE("cycle decompositions") {
  const Graph c100 = fam("cycle:100");
  const auto d = hyperfinite_decompose(c100, 0.5, 10);
  check_contract(c100, d);
  CHECK(d.removed_edges.size() <= 50);
  for (const auto& c : d.components) CHECK(c.graph.num_edges() + 1 == c.graph.num_vertices());

  const Graph c1000 = fam("cycle:1000");
  const auto e = hyperfinite_decompose(c1000, 0.04, 40);
  check_contract(c1000, e);
  CHECK_FALSE(e.budget_exceeded);
  CHECK(e.removed_edges.size() <= 40);
  CHECK(e.k_observed <= 81);
  const Census census = component_census(e);
  CHECK(census.classes.size() <= 3);
}

TEST_CASE("census examples") {
  const Graph empty = build_graph(9, {}, 2);
  const Census c = component_census(hyperfinite_decompose(empty, 0.3));
  REQUIRE(c.classes.size() == 1);
  CHECK(c.fraction(0) == 1.0);

  Decomposition d;
  d.num_vertices = 8;
  d.components = {{{0, 1, 2}, fam("path:3")}, {{3, 4}, fam("path:2")}, {{5, 6, 7}, fam("path:3")}};
  const Census u = component_census(d);
  REQUIRE(u.classes.size() == 2);
  const auto fr = u.fractions();
  CHECK(fr.at(canonical_component_code(fam("path:3")).hex()) == 6.0 / 8);
  CHECK(fr.at(canonical_component_code(fam("path:2")).hex()) == 2.0 / 8);
}

TEST_CASE("contract on random and lattice graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(60, 3, 10, rng);
    for (double delta : {0.05, 0.2, 0.5, 1.0}) check_contract(g, hyperfinite_decompose(g, delta, 6));
  }
  for (const char* f : {"grid2d:30x30", "torus2d:20x20", "cube3d:4", "triangular:15x15", "ladder:200"}) {
    const Graph g = fam(f);
    const auto d = hyperfinite_decompose(g, 0.3, 40);
    check_contract(g, d);
    CHECK_FALSE(d.budget_exceeded);
    double total = 0.0;
    const Census c = component_census(d);
    for (std::size_t i = 0; i < c.classes.size(); ++i) total += c.fraction(i);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("budget overrun is flagged on expanders") {
  const Graph g = fam("rrg:n=500,d=3,g=5,seed=1");
  const auto d = hyperfinite_decompose(g, 0.05, 3);
  check_contract(g, d);
  CHECK(d.budget_exceeded);
}

TEST_CASE("deterministic") {
  const Graph g = fam("triangular:20x20");
  const auto a = hyperfinite_decompose(g, 0.25);
  const auto b = hyperfinite_decompose(g, 0.25);
  CHECK(a.removed_edges == b.removed_edges);
  CHECK(a.components.size() == b.components.size());
}

TEST_CASE("argument validation") {
  const Graph g = fam("path:5");
  CHECK_THROWS_AS(hyperfinite_decompose(g, 0.0), Error);
  CHECK_THROWS_AS(hyperfinite_decompose(g, 1.5), Error);
  CHECK_THROWS_AS(hyperfinite_decompose(g, 0.5, 0), Error);
}

TEST_CASE("residual balls never exceed host balls") {
  const Graph g = fam("grid2d:20x20");
  const Graph residual = remove_edges(g, hyperfinite_decompose(g, 0.3).removed_edges);
  for (Vertex v = 0; v < g.num_vertices(); v += 17) {
    for (std::size_t r = 0; r < 5; ++r) CHECK(ball(residual, v, r).size() <= ball(g, v, r).size());
  }
}
