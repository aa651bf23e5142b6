#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gridconvex {

/// Every seeded draw in the library goes through this engine. The standard
/// pins mt19937_64's output sequence exactly, so a seed replays bit-identically
/// on any conforming platform. The std:: distributions are not pinned, hence
/// the hand-written helpers below.
using Engine = std::mt19937_64;
inline constexpr std::string_view kEngineName = "mt19937_64";

/// Uniform integer in [0, bound). Rejection sampling over the top of the
/// 64-bit range keeps it unbiased.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
  // limit == 0 means bound divides 2^64
  for (;;) {
    const std::uint64_t x = engine();
    if (limit == 0 || x < limit) return x % bound;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_real(Engine& engine, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(engine);
}

}  // namespace gridconvex
