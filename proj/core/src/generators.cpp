#include "locascope/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

#include "locascope/error.hpp"
#include "locascope/rng.hpp"

namespace locascope {
namespace {

std::size_t parse_size(const std::string& text, const std::string& context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad number '" + text + "' in '" + context + "'");
  }
  return value;
}

void parse_dims(const std::string& arg, FamilySpec& spec, const std::string& context) {
  const auto x = arg.find('x');
  if (x == std::string::npos) {
    spec.a = spec.b = parse_size(arg, context);
  } else {
    spec.a = parse_size(arg.substr(0, x), context);
    spec.b = parse_size(arg.substr(x + 1), context);
  }
}

Graph lattice(std::size_t n, const std::vector<Edge>& edges, std::size_t degree) {
  return build_graph(n, edges, degree);
}

Graph grid(std::size_t rows, std::size_t cols, bool wrap, bool diagonal) {
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      else if (wrap) edges.emplace_back(id(i, 0), id(i, j));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
      else if (wrap) edges.emplace_back(id(0, j), id(i, j));
      if (diagonal && i + 1 < rows && j + 1 < cols) edges.emplace_back(id(i, j), id(i + 1, j + 1));
    }
  }
  return lattice(rows * cols, edges, diagonal ? 6 : 4);
}

Graph cube(std::size_t half) {
  const std::size_t s = 2 * half + 1;
  auto id = [s](std::size_t x, std::size_t y, std::size_t z) { return static_cast<Vertex>((x * s + y) * s + z); };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t y = 0; y < s; ++y)
      for (std::size_t z = 0; z < s; ++z) {
        if (x + 1 < s) edges.emplace_back(id(x, y, z), id(x + 1, y, z));
        if (y + 1 < s) edges.emplace_back(id(x, y, z), id(x, y + 1, z));
        if (z + 1 < s) edges.emplace_back(id(x, y, z), id(x, y, z + 1));
      }
  return lattice(s * s * s, edges, 6);
}

// One pairing attempt: stubs are matched one at a time, and a pair is only
// allowed when it closes no cycle shorter than the girth target.
std::optional<std::vector<Edge>> pair_with_girth(const FamilySpec& spec, std::mt19937_64& rng) {
  const std::size_t n = spec.a;
  const std::size_t d = spec.degree;
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> stubs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < d; ++k) stubs.push_back(static_cast<Vertex>(v));
  std::vector<int> dist(n, -1);
  std::vector<Vertex> touched;
  std::vector<std::size_t> candidates;
  std::vector<Edge> edges;
  const std::size_t half = n / 2;
  while (!stubs.empty()) {
    const std::size_t pick = static_cast<std::size_t>(bounded(rng(), stubs.size()));
    const Vertex u = stubs[pick];
    // Vertices within distance girth-2 of u would close a short cycle.
    touched.assign(1, u);
    dist[u] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const Vertex x = touched[head];
      if (static_cast<std::size_t>(dist[x]) + 2 >= spec.girth) continue;
      for (Vertex y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
        }
      }
    }
    candidates.clear();
    for (std::size_t i = 0; i < stubs.size(); ++i) {
      const Vertex w = stubs[i];
      if (dist[w] >= 0) continue;  // includes w == u
      if (spec.bipartite && ((u < half) == (w < half))) continue;
      candidates.push_back(i);
    }
    for (Vertex x : touched) dist[x] = -1;
    if (candidates.empty()) return std::nullopt;
    const std::size_t other = candidates[static_cast<std::size_t>(bounded(rng(), candidates.size()))];
    const Vertex w = stubs[other];
    adj[u].push_back(w);
    adj[w].push_back(u);
    edges.emplace_back(std::min(u, w), std::max(u, w));
    const std::size_t first = std::max(pick, other), second = std::min(pick, other);
    stubs[first] = stubs.back();
    stubs.pop_back();
    stubs[second] = stubs.back();
    stubs.pop_back();
  }
  return edges;
}

Graph random_regular_girth(const FamilySpec& spec) {
  std::mt19937_64 rng(splitmix64(spec.seed));
  for (std::size_t attempt = 0; attempt < kGirthRetryBudget; ++attempt) {
    auto edges = pair_with_girth(spec, rng);
    if (!edges) continue;
    Graph g = build_graph(spec.a, *edges, spec.degree);
    if (!spec.bipartite && is_bipartite(g)) continue;
    return g;
  }
  throw Error(ErrorCode::InfeasibleSpec, "no " + spec.to_string() + " graph found within " +
                                             std::to_string(kGirthRetryBudget) + " attempts");
}

std::size_t lattice_degree(Family f) {
  switch (f) {
    case Family::Path:
    case Family::Cycle: return 2;
    case Family::Ladder: return 3;
    case Family::Grid2d: return 4;
    case Family::Cube3d:
    case Family::Triangular: return 6;
    default: return 0;
  }
}

}  // namespace

void FamilySpec::validate() const {
  auto fail = [this](const std::string& why) { throw Error(ErrorCode::InfeasibleSpec, to_string() + ": " + why); };
  switch (family) {
    case Family::Path:
    case Family::Ladder:
      if (a < 1) fail("size must be at least 1");
      break;
    case Family::Cycle:
      if (a < 3) fail("a cycle needs at least 3 vertices");
      break;
    case Family::Grid2d:
    case Family::Triangular:
      if (a < 1 || b < 1) fail("sizes must be at least 1");
      break;
    case Family::Torus2d:
      if (a < 3 || b < 3) fail("torus sides must be at least 3");
      break;
    case Family::Cube3d:
      break;
    case Family::RandomRegularGirth:
      if (a < 1 || degree < 1) fail("n and d must be positive");
      if ((a * degree) % 2 != 0) fail("n*d must be even");
      if (girth < 3) fail("girth target must be at least 3");
      if (degree >= a) fail("d must be smaller than n");
      if (bipartite && a % 2 != 0) fail("bipartite variant needs even n");
      break;
    case Family::DisjointUnion:
      if (parts.empty()) fail("union needs at least one part");
      for (const auto& p : parts) p.validate();
      break;
  }
}

std::string FamilySpec::to_string() const {
  const std::string dims = std::to_string(a) + "x" + std::to_string(b);
  switch (family) {
    case Family::Path: return "path:" + std::to_string(a);
    case Family::Cycle: return "cycle:" + std::to_string(a);
    case Family::Ladder: return "ladder:" + std::to_string(a);
    case Family::Grid2d: return "grid2d:" + dims;
    case Family::Torus2d: return "torus2d:" + dims;
    case Family::Triangular: return "triangular:" + dims;
    case Family::Cube3d: return "cube3d:" + std::to_string(a);
    case Family::RandomRegularGirth:
      return "rrg:n=" + std::to_string(a) + ",d=" + std::to_string(degree) + ",g=" + std::to_string(girth) +
             ",seed=" + std::to_string(seed) + ",bipartite=" + (bipartite ? "1" : "0");
    case Family::DisjointUnion: {
      std::string out = "union:";
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i].to_string();
      return out;
    }
  }
  return "unknown";
}

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "family spec '" + text + "' lacks ':'");
  const std::string head = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  FamilySpec spec;
  if (head == "path" || head == "cycle" || head == "ladder" || head == "cube3d") {
    spec.family = head == "path" ? Family::Path
                  : head == "cycle" ? Family::Cycle
                  : head == "ladder" ? Family::Ladder
                                     : Family::Cube3d;
    spec.a = parse_size(arg, text);
  } else if (head == "grid2d" || head == "torus2d" || head == "triangular") {
    spec.family = head == "grid2d" ? Family::Grid2d : head == "torus2d" ? Family::Torus2d : Family::Triangular;
    parse_dims(arg, spec, text);
  } else if (head == "rrg" || head == "random_regular_girth") {
    spec.family = Family::RandomRegularGirth;
    std::map<std::string, std::string> fields;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + item + "'");
      fields[item.substr(0, eq)] = item.substr(eq + 1);
    }
    for (const auto& [key, value] : fields) {
      if (key == "n") spec.a = parse_size(value, text);
      else if (key == "d") spec.degree = parse_size(value, text);
      else if (key == "g") spec.girth = parse_size(value, text);
      else if (key == "seed") spec.seed = parse_size(value, text);
      else if (key == "bipartite") spec.bipartite = parse_size(value, text) != 0;
      else throw Error(ErrorCode::ParseError, "unknown rrg field '" + key + "'");
    }
    if (!fields.count("n")) throw Error(ErrorCode::ParseError, "rrg spec needs n=");
  } else if (head == "union" || head == "disjoint_union") {
    spec.family = Family::DisjointUnion;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, '+')) spec.parts.push_back(parse(item));
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + head + "'");
  }
  spec.validate();
  return spec;
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Path: {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i + 1 < spec.a; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
      return lattice(spec.a, edges, 2);
    }
    case Family::Cycle: {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < spec.a; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % spec.a));
      }
      return lattice(spec.a, edges, 2);
    }
    case Family::Ladder: {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < spec.a; ++i) {
        edges.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
        if (i + 1 < spec.a) {
          edges.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 2));
          edges.emplace_back(static_cast<Vertex>(2 * i + 1), static_cast<Vertex>(2 * i + 3));
        }
      }
      return lattice(2 * spec.a, edges, 3);
    }
    case Family::Grid2d: return grid(spec.a, spec.b, false, false);
    case Family::Torus2d: return grid(spec.a, spec.b, true, false);
    case Family::Triangular: return grid(spec.a, spec.b, false, true);
    case Family::Cube3d: return cube(spec.a);
    case Family::RandomRegularGirth: return random_regular_girth(spec);
    case Family::DisjointUnion: {
      std::vector<Graph> parts;
      for (const auto& p : spec.parts) parts.push_back(generate(p));
      return disjoint_union(parts);
    }
  }
  throw Error(ErrorCode::InfeasibleSpec, "unsupported family");
}

std::vector<FolnerElement> folner_sequence(const FamilySpec& family, std::span<const std::size_t> sizes) {
  const std::size_t full_degree = lattice_degree(family.family);
  if (full_degree == 0) {
    throw Error(ErrorCode::InfeasibleSpec, "no Folner sequence for family of " + family.to_string());
  }
  std::vector<FolnerElement> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw Error(ErrorCode::InfeasibleSpec, "Folner sizes must increase");
    FamilySpec spec;
    spec.family = family.family == Family::Cycle ? Family::Path : family.family;
    spec.a = spec.b = sizes[i];
    FolnerElement e{spec, generate(spec), 0.0};
    std::size_t boundary = 0;
    for (std::size_t v = 0; v < e.graph.num_vertices(); ++v) {
      boundary += e.graph.degree(static_cast<Vertex>(v)) < full_degree ? 1 : 0;
    }
    e.boundary_ratio = static_cast<double>(boundary) / static_cast<double>(e.graph.num_vertices());
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::optional<std::size_t> best;
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n), queue;
  for (std::size_t s = 0; s < n; ++s) {
    queue.assign(1, static_cast<Vertex>(s));
    dist[s] = 0;
    parent[s] = static_cast<Vertex>(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (best && static_cast<std::size_t>(2 * dist[u]) >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
    for (Vertex v : queue) dist[v] = -1;
  }
  return best;
}

}  // namespace locascope
