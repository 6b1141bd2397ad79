#include "permdisc/random.hpp"

namespace permdisc {

Coloring sample_coloring(std::uint64_t seed, std::uint64_t index, int n) {
  std::vector<std::int8_t> values(static_cast<std::size_t>(n));
  const std::uint64_t stream = splitmix64(seed) ^ splitmix64(index * 0xD1B54A32D192ED03ULL + 1);
  std::uint64_t word = 0;
  for (int e = 0; e < n; ++e) {
    if (e % 64 == 0) word = splitmix64(stream + static_cast<std::uint64_t>(e / 64));
    values[static_cast<std::size_t>(e)] = (word >> (e % 64)) & 1 ? +1 : -1;
  }
  return make_coloring(std::move(values));
}

}  // namespace permdisc
