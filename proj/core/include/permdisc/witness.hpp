#pragma once

#include <array>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"

namespace permdisc {

enum class Side { L, R };
enum class Sign { plus, minus };

/// The two essentially distinct arrangements of the sorted block values
/// across the three permutation rows: I is the cyclic arrangement
/// (a b c / c a b / b c a), II the anti-cyclic one (a c b / b a c / c b a).
enum class Configuration { I, II };

/// Subcase of the inductive step when the block sums total >= 1:
/// i means a >= b >= 1, ii means a >= 1 and c <= b <= -1. `none` when the
/// total is negative (the recursion then works on the negated coloring).
enum class CaseTag { i, ii, none };

/// Sorted block sums of a coloring at the family's top level.
struct BlockClassification {
  int a = 0;  // largest block sum
  int b = 0;
  int c = 0;  // smallest; a >= b >= c, all odd, a + b + c = total
  std::array<BlockLabel, 3> blocks{};  // blocks[0] holds a, [1] b, [2] c
  Configuration configuration = Configuration::I;
  CaseTag case_tag = CaseTag::none;
};

/// Sums each third of the ground set, sorts descending (ties broken by
/// block index A < B < C), and derives the configuration from the parity
/// of the value-to-block assignment: even permutations of (A,B,C) give I,
/// odd ones give II. Requires f.k >= 1 (std::domain_error otherwise).
BlockClassification classify_blocks(const PermutationFamily& f, const Coloring& c);

/// Three explicit cuts (one per permutation) certifying a lower or upper
/// bound on the matching disc functional. For side L the cuts are prefix
/// lengths in [0, n]; for side R suffix starts in [1, n+1]. `achieved` is
/// the exact sum of the three cut values and respects `guarantee`:
/// achieved >= guarantee when sign is plus, achieved <= guarantee when
/// sign is minus.
struct WitnessTriple {
  Side side = Side::L;
  Sign sign = Sign::plus;
  std::array<int, 3> cuts{};
  std::array<int, 3> per_perm_values{};
  int achieved = 0;
  int guarantee = 0;
};

/// Replays the constructive content of the inductive lower-bound proof.
///
/// When the requested sign matches the sign of the coloring total, the
/// guarantee is +/-(k + delta + 2): the recursion classifies the blocks,
/// recurses on the diagonal block's induced coloring and extends each
/// sub-cut by the full blocks preceding (side L) or following (side R) it
/// in its row. When the sign mismatches, the guarantee is the complement
/// bound +/-(k - 2*delta + 2), obtained from the opposite-side witness via
/// the exact identity disc_L+ = 3*total - disc_R- (cut conversion
/// x = y - 1). Minus-side witnesses come from the negated coloring.
///
/// The base case k <= 1 is an exhaustive search over all cut triples.
/// Requires a constructed family. On canonical families a guarantee
/// violation is an implementation bug and aborts; on variant families the
/// guarantee is conjectural and the triple is returned for the caller to
/// judge.
WitnessTriple build_witness(const PermutationFamily& f, const Coloring& c,
                            Side side, Sign sign);

struct BadPrefix {
  int perm = 0;   // 1-based
  int x = 0;      // prefix length
  int value = 0;  // signed prefix sum; |value| >= ceil(k/3) + 1
};

/// Runs build_witness on the side-L witness matching the coloring's sign
/// and returns the cut whose single-permutation prefix value is largest in
/// absolute value.
BadPrefix extract_bad_prefix(const PermutationFamily& f, const Coloring& c);

}  // namespace permdisc
