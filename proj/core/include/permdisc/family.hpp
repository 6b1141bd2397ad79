#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permdisc {

/// One of the three consecutive thirds of the ground set at a recursion
/// level: A = [1, n/3], B = [n/3+1, 2n/3], C = [2n/3+1, n].
enum class BlockLabel : int { A = 0, B = 1, C = 2 };

constexpr std::array<BlockLabel, 3> kAllBlocks{BlockLabel::A, BlockLabel::B,
                                               BlockLabel::C};

char to_char(BlockLabel b);

/// Three permutations of [1..n] in one-line notation, together with their
/// inverse (element -> position) maps.
///
/// Families produced by the recursive construction carry their recursion
/// depth k (n = 3^k) and the direction word chosen at each level; families
/// loaded from rows that do not match any construction have k == -1.
///
/// Elements and positions are 1-based at every interface.
struct PermutationFamily {
  int k = -1;
  int n = 0;
  std::string variant;  // word over {R,L}, outermost level first; "" when k <= 0
  std::array<std::vector<int>, 3> perms;      // perms[i][p-1] = element at position p
  std::array<std::vector<int>, 3> positions;  // positions[i][e-1] = position of element e

  bool constructed() const { return k >= 0; }
  int element_at(int perm, int pos) const { return perms[perm][pos - 1]; }
  int position_of(int perm, int element) const { return positions[perm][element - 1]; }

  friend bool operator==(const PermutationFamily& a, const PermutationFamily& b) {
    return a.perms == b.perms;
  }
};

/// The canonical direction word: k right shifts.
std::string all_right(int k);

/// True for families built with the all-R word.
bool is_canonical(const PermutationFamily& f);

/// Block order of each permutation row at one recursion level.
/// direction 'R' gives rows (A B C / C A B / B C A); 'L' gives the mirror
/// (A B C / B C A / C A B).
std::array<std::array<BlockLabel, 3>, 3> level_pattern(char direction);

/// Builds the family on [1..3^k] by iterating the 3-block permute step k
/// times, choosing the shift direction at level h from variant[h-1].
/// Throws std::invalid_argument if the word length does not equal k.
PermutationFamily build_family(int k, std::string_view variant);

/// Canonical (all-R) family.
PermutationFamily build_family(int k);

/// Independent construction of the same families: the k-fold tensor action
/// of the three 3x3 shift matrices, realized as a base-3 digit map on
/// positions (never materializing the 3^k x 3^k matrix). Serves as the
/// construction oracle for build_family.
PermutationFamily build_family_tensor(int k, std::string_view variant);
PermutationFamily build_family_tensor(int k);

/// Restriction of each permutation to the elements of one third of the
/// ground set, order preserved, relabeled onto [1..3^(k-1)] by the unique
/// order-preserving bijection. Throws std::domain_error when f.k == 0.
PermutationFamily induced_subfamily(const PermutationFamily& f, BlockLabel block);

/// Ground-set element range [lo, hi] of a top-level block.
std::pair<int, int> block_range(const PermutationFamily& f, BlockLabel block);

/// Wraps raw one-line-notation rows. Validates that every row is a
/// bijection on [1..n] (std::invalid_argument otherwise) and recognizes
/// recursive structure, filling k and variant when the rows match a
/// constructed family.
PermutationFamily family_from_perms(std::array<std::vector<int>, 3> perms);

}  // namespace permdisc
