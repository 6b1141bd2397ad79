#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <span>
#include <utility>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"
#include "permdisc/metrics.hpp"

namespace permdisc {

/// Visits every coloring of [1..n] whose first `fixed.size()` elements are
/// pinned to the given signs. The remaining elements start at +1 and are
/// enumerated in reflected Gray-code order, so consecutive colorings differ
/// in exactly one element and the profile is maintained by single-flip
/// updates.
///
/// Visitor signature: bool(const Coloring&, const PrefixProfile&); return
/// false to stop early. Returns false iff a visitor stopped the sweep.
template <class Visitor>
bool for_each_coloring_gray(const PermutationFamily& f,
                            std::span<const std::int8_t> fixed,
                            Visitor&& visit) {
  const int n = f.n;
  const int first_free = static_cast<int>(fixed.size()) + 1;  // 1-based element
  const int free_count = n - first_free + 1;

  std::vector<std::int8_t> values(static_cast<std::size_t>(n), +1);
  for (std::size_t j = 0; j < fixed.size(); ++j) values[j] = fixed[j];
  Coloring c = make_coloring(std::move(values));
  PrefixProfile profile = prefix_profile(f, c);

  if (free_count >= 63)
    throw std::invalid_argument("Gray enumeration is capped at 62 free elements");
  if (!visit(static_cast<const Coloring&>(c),
             static_cast<const PrefixProfile&>(profile)))
    return false;
  if (free_count <= 0) return true;

  const std::uint64_t steps = std::uint64_t{1} << free_count;
  for (std::uint64_t s = 1; s < steps; ++s) {
    const int bit = std::countr_zero(s);
    flip_element(profile, f, c, first_free + bit);
    if (!visit(static_cast<const Coloring&>(c),
               static_cast<const PrefixProfile&>(profile)))
      return false;
  }
  return true;
}

/// Static partition of the free subcube for `workers` parallel sweepers:
/// worker w handles the fixed leading patterns {p : p mod workers == w}
/// over the first `bits` free elements. Returns the number of pattern bits.
inline int partition_bits(int free_count, int workers) {
  int bits = 0;
  while ((1 << bits) < workers && bits < free_count) ++bits;
  return bits;
}

}  // namespace permdisc
