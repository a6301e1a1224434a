#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace drfwl::detail {

// Platform-independent conversions of raw mt19937_64 output. The standard
// distributions are implementation-defined, so they are avoided.

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

}  // namespace drfwl::detail
