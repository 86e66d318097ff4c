#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "locascope/ball.hpp"
#include "locascope/graph.hpp"

namespace locascope {

/// Rooted-isomorphism class of a rooted (r,d)-ball.
struct BallCode {
  std::string bytes;
  std::size_t radius = 0;
  std::size_t degree_bound = 0;

  std::string hex() const;
  friend auto operator<=>(const BallCode&, const BallCode&) = default;
};

/// Isomorphism class of a connected graph, ignoring roots.
struct ComponentCode {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const ComponentCode&, const ComponentCode&) = default;
};

/// Canonical byte form of a vertex-coloured graph. Two coloured graphs get
/// the same bytes iff some colour-preserving isomorphism maps one onto the
/// other. Colours must be comparable across graphs (they are part of the
/// invariant, not arbitrary labels).
///
/// Colour refinement seeded by `colors`, then individualisation over the
/// first non-singleton cell at every level; the lexicographically smallest
/// leaf encoding wins. Exponential in the worst case, fine for the small
/// balls and components this library deals with.
std::string canonical_form(const Graph& g, std::span<const std::uint32_t> colors);

/// Seeds refinement with (distance from root, degree); the root is the only
/// vertex at distance 0, so it always lands at canonical position 0.
BallCode canonical_rooted_code(const RootedBall& ball);

/// Throws Error{NotConnected} for disconnected input.
ComponentCode canonical_component_code(const Graph& h);

std::string to_hex(std::string_view bytes);
/// Throws Error{ParseError} on odd length or non-hex digits.
std::string from_hex(std::string_view hex);

}  // namespace locascope
