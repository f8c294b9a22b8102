#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace entailkit::detail {

// std::mt19937_64 output is fully specified by the standard, but the
// distributions and std::shuffle are not. These helpers keep every random
// draw identical across standard library implementations.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace entailkit::detail
