#pragma once

#include <cstdint>
#include <random>

namespace sumdiv {

// std::mt19937_64 is fully specified by the standard; std distributions are
// not, so draws go through this helper to stay reproducible across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform in [lo, hi].
inline std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace sumdiv
