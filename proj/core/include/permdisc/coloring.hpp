#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace permdisc {

/// A +/-1 assignment on the ground set, indexed by element (not by
/// position in any permutation). `total` caches the sum over all elements;
/// it always has the parity of n, so for n = 3^k it is odd and |total| >= 1.
struct Coloring {
  std::vector<std::int8_t> values;  // values[e-1] in {-1, +1}
  int total = 0;

  int n() const { return static_cast<int>(values.size()); }
  int delta() const { return std::abs(total); }
  int sign_of(int element) const { return values[element - 1]; }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.values == b.values;
  }
};

/// Validates entries and computes the total. Throws std::invalid_argument
/// on any entry outside {-1, +1}.
Coloring make_coloring(std::vector<std::int8_t> values);

Coloring negated(const Coloring& c);

/// "+-+" rendering, element order 1..n.
std::string to_string(const Coloring& c);

/// Parses either the character form "+-+" or space-separated +/-1 integers.
Coloring coloring_from_string(std::string_view text);

}  // namespace permdisc
