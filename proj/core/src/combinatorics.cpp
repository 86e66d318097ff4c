#include "locascope/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "locascope/error.hpp"

namespace locascope {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

void require_size(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap || n > 64) {
    throw Error(ErrorCode::ComponentTooLarge,
                std::string(what) + ": component has " + std::to_string(n) + " vertices, cap is " +
                    std::to_string(std::min<std::size_t>(cap, 64)) +
                    "; lower delta or raise the cap");
  }
}

std::vector<Mask> adjacency_masks(const Graph& h) {
  std::vector<Mask> adj(h.num_vertices(), 0);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    for (Vertex w : h.neighbors(static_cast<Vertex>(v))) adj[v] |= bit(w);
  }
  return adj;
}

Mask component_of(const std::vector<Mask>& adj, Mask within) {
  Mask comp = within & (~within + 1);
  Mask frontier = comp;
  while (frontier) {
    Mask grow = 0;
    for (Mask f = frontier; f; f &= f - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = grow & within & ~comp;
    comp |= frontier;
  }
  return comp;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& h) : adj_(adjacency_masks(h)) {}

  Mask run() {
    const std::size_t n = adj_.size();
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    best_size_ = -1;
    best_ = 0;
    branch(all, 0);
    return best_;
  }

 private:
  void branch(Mask p, Mask chosen) {
    // Isolated and pendant vertices always belong to some maximum set.
    bool reduced = true;
    while (reduced && p) {
      reduced = false;
      for (Mask f = p; f; f &= f - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(f));
        if (!(p & bit(v))) continue;
        const int d = std::popcount(adj_[v] & p);
        if (d <= 1) {
          chosen |= bit(v);
          p &= ~(adj_[v] | bit(v));
          reduced = true;
        }
      }
    }
    const int size = std::popcount(chosen);
    if (!p) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    // A vertex cover of the remainder needs at least m / max_degree vertices.
    int edges2 = 0;
    int max_deg = 0;
    std::size_t pick = 0;
    for (Mask f = p; f; f &= f - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(f));
      const int d = std::popcount(adj_[v] & p);
      edges2 += d;
      if (d > max_deg) {
        max_deg = d;
        pick = v;
      }
    }
    const int edges = edges2 / 2;
    const int bound = size + std::popcount(p) - (edges + max_deg - 1) / max_deg;
    if (bound <= best_size_) return;
    branch(p & ~(adj_[pick] | bit(pick)), chosen | bit(pick));
    branch(p & ~bit(pick), chosen);
  }

  std::vector<Mask> adj_;
  int best_size_ = -1;
  Mask best_ = 0;
};

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

std::vector<int> two_coloring(const Graph& h) {
  std::vector<int> side(h.num_vertices(), -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < h.num_vertices(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : h.neighbors(queue[i])) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[i]];
          queue.push_back(w);
        }
      }
    }
  }
  return side;
}

constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

std::vector<Vertex> matching_mates(const Graph& h) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const std::size_t n = h.num_vertices();
  BoostGraph bg(n);
  for (auto [u, v] : h.edges()) boost::add_edge(u, v, bg);
  using Descriptor = boost::graph_traits<BoostGraph>::vertex_descriptor;
  std::vector<Descriptor> mate(n);
  if (n > 0) boost::edmonds_maximum_cardinality_matching(bg, mate.data());
  std::vector<Vertex> out(n, kUnmatched);
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] != boost::graph_traits<BoostGraph>::null_vertex()) out[v] = static_cast<Vertex>(mate[v]);
  }
  return out;
}

// König: with a maximum matching, the vertices reachable from unmatched left
// vertices by alternating paths give the independent set (L ∩ Z) ∪ (R \ Z).
std::vector<Vertex> bipartite_independent_set(const Graph& h) {
  const auto side = two_coloring(h);
  const auto mate = matching_mates(h);
  const std::size_t n = h.num_vertices();
  std::vector<bool> reached(n, false);
  std::vector<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == 0 && mate[v] == kUnmatched) {
      reached[v] = true;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex u = queue[i];
    if (side[u] == 0) {
      for (Vertex w : h.neighbors(u)) {
        if (w != mate[u] && !reached[w]) {
          reached[w] = true;
          queue.push_back(w);
        }
      }
    } else if (mate[u] != kUnmatched && !reached[mate[u]]) {
      reached[mate[u]] = true;
      queue.push_back(mate[u]);
    }
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if ((side[v] == 0) == reached[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

class PolynomialRecursion {
 public:
  enum class Kind { Independence, Matching };

  PolynomialRecursion(const Graph& h, Kind kind) : adj_(adjacency_masks(h)), kind_(kind) {}

  CountPolynomial run() {
    const std::size_t n = adj_.size();
    return solve(n == 64 ? ~Mask{0} : bit(n) - 1);
  }

 private:
  CountPolynomial solve(Mask p) {
    if (!p) return {};
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    CountPolynomial result;
    const Mask comp = component_of(adj_, p);
    if (comp != p) {
      result = solve(comp) * solve(p & ~comp);
    } else if (kind_ == Kind::Independence) {
      const std::size_t v = highest_degree(p);
      result = solve(p & ~bit(v)) + solve(p & ~(adj_[v] | bit(v))).shifted(1);
    } else {
      const std::size_t u = highest_degree(p);
      result = solve(p & ~bit(u));
      for (Mask f = adj_[u] & p; f; f &= f - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(f));
        result = result + solve(p & ~(bit(u) | bit(w))).shifted(1);
      }
    }
    memo_.emplace(p, result);
    return result;
  }

  std::size_t highest_degree(Mask p) const {
    std::size_t pick = static_cast<std::size_t>(std::countr_zero(p));
    int best = -1;
    for (Mask f = p; f; f &= f - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(f));
      const int d = std::popcount(adj_[v] & p);
      if (d > best) {
        best = d;
        pick = v;
      }
    }
    return pick;
  }

  std::vector<Mask> adj_;
  Kind kind_;
  std::unordered_map<Mask, CountPolynomial> memo_;
};

// Minimum monochromatic edges over k-colourings of one connected component.
std::size_t min_monochromatic(const Graph& comp, std::size_t k) {
  const std::size_t m = comp.num_vertices();
  if (m == 0) return 0;
  // BFS order so conflicts surface early in the search.
  std::vector<Vertex> order;
  std::vector<int> position(m, -1);
  order.push_back(0);
  position[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : comp.neighbors(order[i])) {
      if (position[w] < 0) {
        position[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::size_t>> earlier(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex w : comp.neighbors(order[i])) {
      if (static_cast<std::size_t>(position[w]) < i) earlier[i].push_back(static_cast<std::size_t>(position[w]));
    }
  }

  // Greedy colouring followed by single-vertex moves gives the first bound.
  std::vector<std::size_t> color(m, 0);
  auto conflicts = [&](std::size_t i, std::size_t c) {
    std::size_t count = 0;
    for (Vertex w : comp.neighbors(order[i])) count += color[static_cast<std::size_t>(position[w])] == c ? 1 : 0;
    return count;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t best_c = 0, best_conf = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t conf = 0;
      for (std::size_t j : earlier[i]) conf += color[j] == c ? 1 : 0;
      if (conf < best_conf) {
        best_conf = conf;
        best_c = c;
      }
    }
    color[i] = best_c;
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t now = conflicts(i, color[i]);
      for (std::size_t c = 0; c < k; ++c) {
        if (conflicts(i, c) < now) {
          color[i] = c;
          moved = true;
          break;
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < m; ++i) best += conflicts(i, color[i]);
  best /= 2;

  std::vector<std::size_t> assign(m, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t i, std::size_t cost, std::size_t used) {
    if (cost >= best) return;
    if (i == m) {
      best = cost;
      return;
    }
    // Colours are interchangeable: vertex i may open at most one new colour.
    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      std::size_t add = 0;
      for (std::size_t j : earlier[i]) add += assign[j] == c ? 1 : 0;
      assign[i] = c;
      dfs(i + 1, cost + add, std::max(used, c + 1));
    }
  };
  dfs(0, 0, 0);
  return best;
}

// Minimum edges hitting every triangle of one component.
std::size_t min_triangle_hitting(const Graph& comp) {
  const auto edges = comp.edges();
  auto edge_id = [&](Vertex a, Vertex b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  std::vector<std::array<std::size_t, 3>> triangles;
  for (auto [u, v] : edges) {
    for (Vertex w : comp.neighbors(v)) {
      if (w > v && comp.has_edge(u, w)) triangles.push_back({edge_id(u, v), edge_id(v, w), edge_id(u, w)});
    }
  }
  if (triangles.empty()) return 0;
  std::vector<bool> removed(edges.size(), false);
  std::size_t best = triangles.size();  // one edge per triangle always works
  std::function<void(std::size_t)> dfs = [&](std::size_t used) {
    if (used >= best) return;
    const std::array<std::size_t, 3>* open = nullptr;
    for (const auto& t : triangles) {
      if (!removed[t[0]] && !removed[t[1]] && !removed[t[2]]) {
        open = &t;
        break;
      }
    }
    if (!open) {
      best = used;
      return;
    }
    const auto tri = *open;
    for (std::size_t e : tri) {
      removed[e] = true;
      dfs(used + 1);
      removed[e] = false;
    }
  };
  dfs(0);
  return best;
}

}  // namespace

std::vector<Vertex> max_independent_set_search(const Graph& h, const SolverLimits& limits) {
  require_size(h.num_vertices(), limits.exact_cap, "max_independent_set");
  if (h.num_vertices() == 0) return {};
  return mask_to_vertices(IndependentSetSearch(h).run());
}

std::vector<Vertex> max_independent_set(const Graph& h, const SolverLimits& limits) {
  if (is_bipartite(h)) return bipartite_independent_set(h);
  return max_independent_set_search(h, limits);
}

std::vector<Edge> max_matching(const Graph& h) {
  const auto mate = matching_mates(h);
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(static_cast<Vertex>(v), mate[v]);
  }
  return out;
}

CountPolynomial independence_polynomial(const Graph& h, const SolverLimits& limits) {
  require_size(h.num_vertices(), limits.exact_cap, "independence_polynomial");
  return PolynomialRecursion(h, PolynomialRecursion::Kind::Independence).run();
}

CountPolynomial matching_polynomial(const Graph& h, const SolverLimits& limits) {
  require_size(h.num_vertices(), limits.exact_cap, "matching_polynomial");
  return PolynomialRecursion(h, PolynomialRecursion::Kind::Matching).run();
}

std::string PropertyTag::name() const {
  switch (kind) {
    case PropertyKind::Bipartite: return "bipartite";
    case PropertyKind::Forest: return "forest";
    case PropertyKind::KColorable: return "k_colorable(" + std::to_string(k) + ")";
    case PropertyKind::TriangleFree: return "triangle_free";
  }
  return "unknown";
}

PropertyTag PropertyTag::parse(const std::string& text) {
  if (text == "bipartite") return bipartite();
  if (text == "forest") return forest();
  if (text == "triangle_free" || text == "k3_free") return triangle_free();
  std::string digits;
  if (text.rfind("k_colorable(", 0) == 0 && text.back() == ')') {
    digits = text.substr(12, text.size() - 13);
  } else if (text.rfind("k_colorable:", 0) == 0) {
    digits = text.substr(12);
  } else {
    throw Error(ErrorCode::ParseError, "unknown property '" + text + "'");
  }
  std::size_t k = 0;
  try {
    k = std::stoul(digits);
  } catch (...) {
    throw Error(ErrorCode::ParseError, "bad colour count in '" + text + "'");
  }
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k_colorable needs k >= 2");
  return k_colorable(k);
}

std::size_t edges_to_property(const Graph& h, const PropertyTag& property, const SolverLimits& limits) {
  if (property.kind == PropertyKind::Forest) {
    // Cycle rank.
    return h.num_edges() + connected_components(h).size() - h.num_vertices();
  }
  if (property.kind == PropertyKind::KColorable && property.k < 2) {
    throw Error(ErrorCode::InvalidArgument, "k_colorable needs k >= 2");
  }
  const std::size_t colors = property.kind == PropertyKind::KColorable ? property.k : 2;
  if (property.kind != PropertyKind::TriangleFree && is_bipartite(h)) return 0;
  std::size_t total = 0;
  for (const auto& vertices : connected_components(h)) {
    if (vertices.size() <= 1) continue;
    const Graph comp = induced_subgraph(h, vertices);
    if (comp.num_vertices() > limits.coloring_cap) {
      throw Error(ErrorCode::ComponentTooLarge,
                  "dist_to_property(" + property.name() + "): component has " + std::to_string(comp.num_vertices()) +
                      " vertices, cap is " + std::to_string(limits.coloring_cap) + "; lower delta or raise the cap");
    }
    total += property.kind == PropertyKind::TriangleFree ? min_triangle_hitting(comp) : min_monochromatic(comp, colors);
  }
  return total;
}

double dist_to_property(const Graph& h, const PropertyTag& property, const SolverLimits& limits) {
  if (h.num_vertices() == 0) return 0.0;
  return static_cast<double>(edges_to_property(h, property, limits)) / static_cast<double>(h.num_vertices());
}

}  // namespace locascope
