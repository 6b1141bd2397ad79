#pragma once

#include <cstdint>

#include "permdisc/coloring.hpp"

namespace permdisc {

/// SplitMix64 mixing step.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based uniform coloring sampler: sample `index` of the stream
/// identified by `seed`. Being counter-based, sweeps over index ranges can
/// be partitioned across workers without coordination and reproduce
/// bit-for-bit regardless of the split.
Coloring sample_coloring(std::uint64_t seed, std::uint64_t index, int n);

}  // namespace permdisc
