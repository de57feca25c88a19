#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dmt::detail {

// mt19937_64 is fully specified by the standard; the helpers below avoid the
// implementation-defined distributions so a seed means the same thing on
// every toolchain.
using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

inline double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return unit(rng) < p; }

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[below(rng, i)]);
  }
}

}  // namespace dmt::detail
