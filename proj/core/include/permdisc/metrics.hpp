#pragma once

#include <array>
#include <vector>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"

namespace permdisc {

/// Running signed sums P_i(x) along each permutation: sums[i][x] is the
/// coloring value of the length-x prefix of permutation i, x in [0..n],
/// with sums[i][0] == 0 and sums[i][n] equal to the coloring total for
/// every i. Consecutive entries differ by exactly 1.
struct PrefixProfile {
  std::array<std::vector<int>, 3> sums;

  int n() const { return static_cast<int>(sums[0].size()) - 1; }
};

PrefixProfile prefix_profile(const PermutationFamily& f, const Coloring& c);

/// Negates one element's color in place and patches the three running-sum
/// arrays (a suffix add per permutation). Equivalent to recomputing the
/// profile from scratch; this is the fast path for enumeration sweeps.
void flip_element(PrefixProfile& profile, const PermutationFamily& f,
                  Coloring& c, int element);

/// The four prefix/suffix sum functionals of a coloring, each with the cut
/// triple attaining it. Prefix cuts are lengths in [0, n] (0 = empty
/// prefix); suffix cuts are start positions in [1, n+1] (n+1 = empty
/// suffix). Ties resolve to the smallest cut.
///
/// Always l_plus >= 0 >= l_minus and r_plus >= 0 >= r_minus, since empty
/// prefixes and suffixes contribute 0.
struct DiscQuadruple {
  int l_plus = 0;
  int l_minus = 0;
  int r_plus = 0;
  int r_minus = 0;
  std::array<int, 3> l_plus_cuts{};
  std::array<int, 3> l_minus_cuts{};
  std::array<int, 3> r_plus_cuts{};
  std::array<int, 3> r_minus_cuts{};
};

/// Exact integer evaluation. The left functionals come from a left-to-right
/// scan, the right ones from an independent right-to-left suffix scan, so
/// the complement identities r_minus + l_plus = r_plus + l_minus =
/// 3 * total are non-trivial cross-checks of this routine.
DiscQuadruple disc_quadruple(const PermutationFamily& f, const Coloring& c);

/// Same, evaluated from an already-maintained profile.
DiscQuadruple disc_quadruple(const PermutationFamily& f, const Coloring& c,
                             const PrefixProfile& profile);

struct PrefixDisc {
  int value = 0;  // max_{i, x in [1..n]} |P_i(x)|
  int perm = 0;   // witnessing permutation, 1-based
  int x = 0;      // witnessing prefix length
};

/// Discrepancy of the coloring against the set system of all non-empty
/// prefixes of the three permutations.
PrefixDisc prefix_system_discrepancy(const PermutationFamily& f, const Coloring& c);

/// Discrepancy against all intervals of the three permutations; per
/// permutation this is max_x P_i(x) - min_x P_i(x), and it dominates the
/// prefix value.
int interval_system_discrepancy(const PermutationFamily& f, const Coloring& c);

}  // namespace permdisc
