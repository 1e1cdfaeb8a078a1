#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace opact {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to whiten derived seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Child seed for a named random consumer. Each label gets its own stream,
/// so adding a consumer never shifts the draws of another.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view label) noexcept {
  return mix64(parent ^ mix64(fnv1a(label)));
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view label,
                                    std::uint64_t a, std::uint64_t b = 0) noexcept {
  return mix64(derive_seed(parent, label) ^ mix64(a * 0x9e3779b97f4a7c15ULL + b));
}

/// Uniform double in [0,1) from the top 53 bits. Unlike
/// std::uniform_real_distribution this is identical across standard libraries.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace opact
