#include "locascope/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "locascope/error.hpp"

namespace locascope {
namespace {

using Colors = std::vector<std::uint32_t>;

// Replaces colours by dense ranks of the given keys, preserving key order.
template <class Key>
std::size_t rank_by(Colors& colors, const std::vector<Key>& keys) {
  const std::size_t n = keys.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++next;
    colors[order[i]] = static_cast<std::uint32_t>(next);
  }
  return n == 0 ? 0 : next + 1;
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// Returns the number of cells.
std::size_t refine(const Graph& g, Colors& colors) {
  const std::size_t n = g.num_vertices();
  std::size_t cells = rank_by(colors, Colors(colors));
  std::vector<std::vector<std::uint32_t>> signature(n);
  while (cells < n) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colors[v]);
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) sig.push_back(colors[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    const std::size_t next = rank_by(colors, signature);
    if (next == cells) break;
    cells = next;
  }
  return cells;
}

std::string encode_leaf(const Graph& g, const Colors& position, std::span<const std::uint32_t> seed) {
  const std::size_t n = g.num_vertices();
  const int width = n <= 0xffu ? 1 : (n <= 0xffffu ? 2 : 4);
  std::string out;
  auto put = [&out](std::uint32_t value, int bytes) {
    for (int b = bytes - 1; b >= 0; --b) out.push_back(static_cast<char>((value >> (8 * b)) & 0xffu));
  };
  put(static_cast<std::uint32_t>(n), 4);
  std::vector<Vertex> at(n);
  for (std::size_t v = 0; v < n; ++v) at[position[v]] = static_cast<Vertex>(v);
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = at[i];
    put(seed[v], 4);
    labels.clear();
    for (Vertex w : g.neighbors(v)) labels.push_back(position[w]);
    std::sort(labels.begin(), labels.end());
    put(static_cast<std::uint32_t>(labels.size()), 2);
    for (std::uint32_t l : labels) put(l, width);
  }
  return out;
}

void search(const Graph& g, Colors colors, std::span<const std::uint32_t> seed, std::optional<std::string>& best) {
  const std::size_t n = g.num_vertices();
  const std::size_t cells = refine(g, colors);
  if (cells == n) {
    std::string leaf = encode_leaf(g, colors, seed);
    if (!best || leaf < *best) best = std::move(leaf);
    return;
  }
  std::vector<std::uint32_t> size(cells, 0);
  for (std::uint32_t c : colors) ++size[c];
  std::uint32_t target = 0;
  while (size[target] == 1) ++target;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Colors child(n);
    for (std::size_t u = 0; u < n; ++u) {
      child[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1u : 0u);
    }
    search(g, std::move(child), seed, best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g, std::span<const std::uint32_t> colors) {
  std::optional<std::string> best;
  search(g, Colors(colors.begin(), colors.end()), colors, best);
  return best ? *best : encode_leaf(g, {}, colors);
}

BallCode canonical_rooted_code(const RootedBall& ball) {
  const auto depth = internal_depths(ball);
  Colors seed(ball.size());
  for (std::size_t v = 0; v < ball.size(); ++v) {
    seed[v] = (depth[v] << 16) | static_cast<std::uint32_t>(ball.graph.degree(static_cast<Vertex>(v)));
  }
  return {canonical_form(ball.graph, seed), ball.radius, ball.graph.degree_bound()};
}

ComponentCode canonical_component_code(const Graph& h) {
  if (!is_connected(h)) throw Error(ErrorCode::NotConnected, "component code needs a connected graph");
  Colors seed(h.num_vertices());
  for (std::size_t v = 0; v < seed.size(); ++v) seed[v] = static_cast<std::uint32_t>(h.degree(static_cast<Vertex>(v)));
  return {canonical_form(h, seed)};
}

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::ParseError, "hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::ParseError, std::string("invalid hex digit '") + c + "'");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return out;
}

std::string BallCode::hex() const { return to_hex(bytes); }
std::string ComponentCode::hex() const { return to_hex(bytes); }

}  // namespace locascope
