#pragma once

#include <cstdint>

namespace locascope {

// Counter-based stream: the value for (seed, index) is a fixed function of
// both, so draws can be generated in any order or in parallel.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_value(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0x5851f42d4c957f2dULL));
}

/// Uniform on [0, 1) with 53 random bits.
constexpr double unit_interval(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

/// Uniform on [0, bound) by multiply-shift; bias is below 2^-64 * bound.
constexpr std::uint64_t bounded(std::uint64_t x, std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(x) * bound) >> 64);
}

}  // namespace locascope
