#include "locascope/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "locascope/error.hpp"
#include "locascope/parallel.hpp"

namespace locascope {
namespace {

// Grows BFS balls inside the residual graph (vertices not yet covered) while
// tracking the number of edges leaving the ball incrementally.
class BallGrower {
 public:
  explicit BallGrower(const Graph& g) : g_(g), alive_(g.num_vertices(), true), stamp_(g.num_vertices(), 0) {}

  struct Result {
    std::vector<Vertex> members;
    std::optional<std::size_t> radius;  // nullopt: no low-cut ball up to r_cap
    std::size_t final_radius = 0;
  };

  Result grow(Vertex v, double delta, std::size_t r_cap) {
    ++epoch_;
    Result out;
    std::size_t cut = 0;
    std::vector<Vertex> layer;
    add(v, cut, out.members);
    layer.push_back(v);
    for (std::size_t r = 0;; ++r) {
      out.final_radius = r;
      if (static_cast<double>(cut) <= delta * static_cast<double>(out.members.size())) {
        out.radius = r;
        return out;
      }
      if (r == r_cap) return out;
      std::vector<Vertex> next;
      for (Vertex u : layer) {
        for (Vertex w : g_.neighbors(u)) {
          if (alive_[w] && stamp_[w] != epoch_) {
            add(w, cut, out.members);
            next.push_back(w);
          }
        }
      }
      layer = std::move(next);
    }
  }

  std::size_t alive_degree(Vertex u) const {
    std::size_t deg = 0;
    for (Vertex w : g_.neighbors(u)) deg += alive_[w] ? 1 : 0;
    return deg;
  }

  bool alive(Vertex u) const { return alive_[u]; }

  /// Marks the members dead and returns the boundary edges that had to go.
  std::vector<Edge> carve(const std::vector<Vertex>& members) {
    ++epoch_;
    for (Vertex u : members) stamp_[u] = epoch_;
    std::vector<Edge> cut;
    for (Vertex u : members) {
      for (Vertex w : g_.neighbors(u)) {
        if (alive_[w] && stamp_[w] != epoch_) cut.emplace_back(std::min(u, w), std::max(u, w));
      }
    }
    for (Vertex u : members) alive_[u] = false;
    return cut;
  }

 private:
  void add(Vertex u, std::size_t& cut, std::vector<Vertex>& members) {
    stamp_[u] = epoch_;
    std::size_t inside = 0;
    for (Vertex w : g_.neighbors(u)) {
      if (alive_[w] && stamp_[w] == epoch_ && w != u) ++inside;
    }
    cut = cut + alive_degree(u) - 2 * inside;
    members.push_back(u);
  }

  const Graph& g_;
  std::vector<bool> alive_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

void check_parameters(double delta, std::size_t r_cap) {
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1]");
  if (r_cap < 1) throw Error(ErrorCode::InvalidArgument, "r_cap must be at least 1");
}

// Edge list of a component in its own local labelling; equal keys mean
// identical labelled graphs, so the canonical code can be reused.
std::string labelled_key(const Graph& g) {
  std::string key;
  key.reserve(8 * g.num_edges() + 4);
  auto put = [&key](std::uint32_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
  put(static_cast<std::uint32_t>(g.num_vertices()));
  for (auto [u, v] : g.edges()) {
    put(u);
    put(v);
  }
  return key;
}

}  // namespace

std::optional<std::size_t> folner_radius(const Graph& g, Vertex v, double delta, std::size_t r_cap) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  BallGrower grower(g);
  return grower.grow(v, delta, r_cap).radius;
}

Decomposition hyperfinite_decompose(const Graph& g, double delta, std::size_t r_cap) {
  check_parameters(delta, r_cap);
  Decomposition d;
  d.num_vertices = g.num_vertices();
  d.degree_bound = g.degree_bound();
  d.delta_used = delta;
  d.r_cap = r_cap;
  BallGrower grower(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!grower.alive(static_cast<Vertex>(v))) continue;
    auto grown = grower.grow(static_cast<Vertex>(v), delta, r_cap);
    if (!grown.radius) d.budget_exceeded = true;
    auto cut = grower.carve(grown.members);
    d.removed_edges.insert(d.removed_edges.end(), cut.begin(), cut.end());
    Component c;
    c.vertices = std::move(grown.members);
    std::sort(c.vertices.begin(), c.vertices.end());
    c.graph = induced_subgraph(g, c.vertices);
    d.k_observed = std::max(d.k_observed, c.vertices.size());
    d.components.push_back(std::move(c));
  }
  std::sort(d.removed_edges.begin(), d.removed_edges.end());
  return d;
}

Census component_census(const Decomposition& d) {
  std::unordered_map<std::string, std::size_t> key_index;
  std::vector<std::size_t> component_key(d.components.size());
  std::vector<std::size_t> first_with_key;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto [it, inserted] = key_index.emplace(labelled_key(d.components[i].graph), first_with_key.size());
    if (inserted) first_with_key.push_back(i);
    component_key[i] = it->second;
  }
  std::vector<ComponentCode> codes(first_with_key.size());
  parallel_for(first_with_key.size(), [&](std::size_t k) {
    codes[k] = canonical_component_code(d.components[first_with_key[k]].graph);
  });

  std::map<std::string, CensusClass> by_code;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const ComponentCode& code = codes[component_key[i]];
    auto [it, inserted] = by_code.try_emplace(code.bytes);
    if (inserted) {
      it->second.code = code;
      it->second.representative = d.components[i].graph;
    }
    ++it->second.copies;
    it->second.vertices += d.components[i].vertices.size();
  }
  Census census;
  census.total_vertices = d.num_vertices;
  for (auto& [bytes, cls] : by_code) census.classes.push_back(std::move(cls));
  return census;
}

std::map<std::string, double> Census::fractions() const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < classes.size(); ++i) out[classes[i].code.hex()] = fraction(i);
  return out;
}

double census_distance(const Census& a, const Census& b) {
  std::map<std::string, double> diff;
  for (std::size_t i = 0; i < a.classes.size(); ++i) diff[a.classes[i].code.bytes] += a.fraction(i);
  for (std::size_t i = 0; i < b.classes.size(); ++i) diff[b.classes[i].code.bytes] -= b.fraction(i);
  double worst = 0.0;
  for (const auto& [code, value] : diff) worst = std::max(worst, std::abs(value));
  return worst;
}

}  // namespace locascope
