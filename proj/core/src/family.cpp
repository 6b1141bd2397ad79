#include "permdisc/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace permdisc {

namespace {

int pow3(int k) {
  int v = 1;
  while (k-- > 0) v *= 3;
  return v;
}

void require_variant(int k, std::string_view variant) {
  if (k < 0) throw std::invalid_argument("recursion depth k must be >= 0");
  if (static_cast<int>(variant.size()) != k)
    throw std::invalid_argument("variant word length " +
                                std::to_string(variant.size()) +
                                " does not match k = " + std::to_string(k));
  for (char d : variant)
    if (d != 'R' && d != 'L')
      throw std::invalid_argument(std::string("variant direction '") + d +
                                  "' is not R or L");
}

// Base-3 digit shift of the level map for permutation i (0-based): an
// element whose digit is d lands at the position whose digit is
// (d + shift) mod 3 -- equivalently the position digit p maps to the
// element digit (p + shift) mod 3.
int digit_shift(int perm, char direction) {
  if (perm == 0) return 0;
  if (perm == 1) return direction == 'R' ? 2 : 1;
  return direction == 'R' ? 1 : 2;
}

void fill_positions(PermutationFamily& f) {
  for (int i = 0; i < 3; ++i) {
    f.positions[i].assign(static_cast<std::size_t>(f.n), 0);
    for (int p = 1; p <= f.n; ++p) f.positions[i][f.perms[i][p - 1] - 1] = p;
  }
}

// Each row must contain every integer 1..n exactly once.
void require_bijections(const std::array<std::vector<int>, 3>& perms) {
  const auto n = perms[0].size();
  for (int i = 0; i < 3; ++i) {
    if (perms[i].size() != n)
      throw std::invalid_argument("permutation rows have different lengths");
    std::vector<char> seen(n, 0);
    for (int v : perms[i]) {
      if (v < 1 || v > static_cast<int>(n))
        throw std::invalid_argument("entry " + std::to_string(v) +
                                    " out of range in permutation " +
                                    std::to_string(i + 1));
      if (seen[v - 1])
        throw std::invalid_argument("element " + std::to_string(v) +
                                    " appears twice in permutation " +
                                    std::to_string(i + 1));
      seen[v - 1] = 1;
    }
  }
}

}  // namespace

char to_char(BlockLabel b) { return static_cast<char>('A' + static_cast<int>(b)); }

std::string all_right(int k) { return std::string(static_cast<std::size_t>(k), 'R'); }

bool is_canonical(const PermutationFamily& f) {
  return f.constructed() && f.variant == all_right(f.k);
}

std::array<std::array<BlockLabel, 3>, 3> level_pattern(char direction) {
  using enum BlockLabel;
  if (direction == 'R') return {{{A, B, C}, {C, A, B}, {B, C, A}}};
  if (direction == 'L') return {{{A, B, C}, {B, C, A}, {C, A, B}}};
  throw std::invalid_argument("direction must be R or L");
}

PermutationFamily build_family(int k, std::string_view variant) {
  require_variant(k, variant);
  PermutationFamily f;
  f.k = k;
  f.variant = variant;
  f.n = pow3(k);
  for (auto& row : f.perms) row = {1};
  // Innermost level first: level h rearranges blocks of size 3^(k-h), so
  // prepending level h around an already-built depth-(k-h) family yields
  // the same rows as the top-down blockwise description.
  for (int level = k; level >= 1; --level) {
    const auto pattern = level_pattern(variant[static_cast<std::size_t>(level - 1)]);
    const int m = static_cast<int>(f.perms[0].size());
    for (int i = 0; i < 3; ++i) {
      std::vector<int> next;
      next.reserve(static_cast<std::size_t>(3) * m);
      for (int slot = 0; slot < 3; ++slot) {
        const int offset = m * static_cast<int>(pattern[i][slot]);
        for (int v : f.perms[i]) next.push_back(v + offset);
      }
      f.perms[i] = std::move(next);
    }
  }
  fill_positions(f);
  return f;
}

PermutationFamily build_family(int k) { return build_family(k, all_right(k)); }

PermutationFamily build_family_tensor(int k, std::string_view variant) {
  require_variant(k, variant);
  PermutationFamily f;
  f.k = k;
  f.variant = variant;
  f.n = pow3(k);

  std::vector<int> place(static_cast<std::size_t>(k));  // 3^(k-h) for level h
  for (int h = 1; h <= k; ++h) place[static_cast<std::size_t>(h - 1)] = pow3(k - h);

  for (int i = 0; i < 3; ++i) {
    f.perms[i].resize(static_cast<std::size_t>(f.n));
    for (int p = 0; p < f.n; ++p) {
      int e = 0;
      for (int h = 1; h <= k; ++h) {
        const int w = place[static_cast<std::size_t>(h - 1)];
        const int d = (p / w) % 3;
        const int shift = digit_shift(i, variant[static_cast<std::size_t>(h - 1)]);
        e += ((d + shift) % 3) * w;
      }
      f.perms[i][static_cast<std::size_t>(p)] = e + 1;
    }
  }
  fill_positions(f);
  return f;
}

PermutationFamily build_family_tensor(int k) {
  return build_family_tensor(k, all_right(k));
}

std::pair<int, int> block_range(const PermutationFamily& f, BlockLabel block) {
  const int m = f.n / 3;
  const int lo = m * static_cast<int>(block) + 1;
  return {lo, lo + m - 1};
}

PermutationFamily induced_subfamily(const PermutationFamily& f, BlockLabel block) {
  if (!f.constructed() || f.k < 1)
    throw std::domain_error("induced_subfamily needs a constructed family with k >= 1");
  const auto [lo, hi] = block_range(f, block);
  PermutationFamily sub;
  sub.k = f.k - 1;
  sub.variant = f.variant.substr(1);
  sub.n = f.n / 3;
  for (int i = 0; i < 3; ++i) {
    sub.perms[i].reserve(static_cast<std::size_t>(sub.n));
    for (int e : f.perms[i])
      if (lo <= e && e <= hi) sub.perms[i].push_back(e - lo + 1);
  }
  fill_positions(sub);
  return sub;
}

PermutationFamily family_from_perms(std::array<std::vector<int>, 3> perms) {
  require_bijections(perms);
  PermutationFamily f;
  f.n = static_cast<int>(perms[0].size());
  f.perms = std::move(perms);
  fill_positions(f);

  // Recognize recursive structure: n must be a power of 3 and, because the
  // element at position 1 of permutation 2 exposes the level shift in every
  // base-3 digit, one probe determines the only candidate word.
  int k = 0, n = f.n;
  while (n % 3 == 0) {
    n /= 3;
    ++k;
  }
  if (n != 1) return f;
  std::string word(static_cast<std::size_t>(k), '?');
  int q = f.perms[1][0] - 1;
  for (int h = k; h >= 1; --h) {
    const int d = q % 3;
    q /= 3;
    if (d == 2)
      word[static_cast<std::size_t>(h - 1)] = 'R';
    else if (d == 1)
      word[static_cast<std::size_t>(h - 1)] = 'L';
    else
      return f;  // not a constructed family
  }
  const PermutationFamily candidate = build_family(k, word);
  if (candidate.perms == f.perms) {
    f.k = k;
    f.variant = word;
  }
  return f;
}

}  // namespace permdisc
