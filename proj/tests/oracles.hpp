#pragma once

// Test-only brute-force oracles. Each one recomputes its quantity by the
// most literal route available (triple enumeration, direct interval sums,
// dense tensor products) so the library paths are checked against genuinely
// independent code.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"

namespace permdisc::testing {

inline int prefix_value(const PermutationFamily& f, const Coloring& c, int perm, int x) {
  int s = 0;
  for (int p = 1; p <= x; ++p)
    s += c.values[static_cast<std::size_t>(f.perms[static_cast<std::size_t>(perm)]
                                                  [static_cast<std::size_t>(p - 1)]) - 1];
  return s;
}

inline int suffix_value(const PermutationFamily& f, const Coloring& c, int perm, int y) {
  int s = 0;
  for (int p = y; p <= f.n; ++p)
    s += c.values[static_cast<std::size_t>(f.perms[static_cast<std::size_t>(perm)]
                                                  [static_cast<std::size_t>(p - 1)]) - 1];
  return s;
}

struct BruteQuadruple {
  int l_plus, l_minus, r_plus, r_minus;
};

// Literal enumeration of all prefix triples (x,y,z) in [0,n]^3 and all
// suffix triples in [1,n+1]^3.
inline BruteQuadruple brute_quadruple(const PermutationFamily& f, const Coloring& c) {
  const int n = f.n;
  std::array<std::vector<int>, 3> pre, suf;
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x <= n; ++x)
      pre[static_cast<std::size_t>(i)].push_back(prefix_value(f, c, i, x));
    for (int y = 1; y <= n + 1; ++y)
      suf[static_cast<std::size_t>(i)].push_back(suffix_value(f, c, i, y));
  }
  BruteQuadruple q{0, 0, 0, 0};
  bool first = true;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      for (int z = 0; z <= n; ++z) {
        const int s = pre[0][static_cast<std::size_t>(x)] +
                      pre[1][static_cast<std::size_t>(y)] +
                      pre[2][static_cast<std::size_t>(z)];
        if (first || s > q.l_plus) q.l_plus = s;
        if (first || s < q.l_minus) q.l_minus = s;
        first = false;
      }
  first = true;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      for (int z = 0; z <= n; ++z) {
        const int s = suf[0][static_cast<std::size_t>(x)] +
                      suf[1][static_cast<std::size_t>(y)] +
                      suf[2][static_cast<std::size_t>(z)];
        if (first || s > q.r_plus) q.r_plus = s;
        if (first || s < q.r_minus) q.r_minus = s;
        first = false;
      }
  return q;
}

// max |chi(prefix)| over all non-empty prefixes, by direct summation.
inline int brute_prefix_disc(const PermutationFamily& f, const Coloring& c) {
  int best = 0;
  for (int i = 0; i < 3; ++i)
    for (int x = 1; x <= f.n; ++x) {
      const int v = prefix_value(f, c, i, x);
      best = std::max(best, v < 0 ? -v : v);
    }
  return best;
}

// max |chi(interval)| over all intervals of all three permutations.
inline int brute_interval_disc(const PermutationFamily& f, const Coloring& c) {
  int best = 0;
  for (int i = 0; i < 3; ++i)
    for (int lo = 1; lo <= f.n; ++lo)
      for (int hi = lo; hi <= f.n; ++hi) {
        int s = 0;
        for (int p = lo; p <= hi; ++p)
          s += c.values[static_cast<std::size_t>(
                            f.perms[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(p - 1)]) - 1];
        best = std::max(best, s < 0 ? -s : s);
      }
  return best;
}

// Coloring number `mask` of the full 2^n space; bit j set colors element
// j+1 with -1.
inline Coloring coloring_from_mask(std::uint64_t mask, int n) {
  std::vector<std::int8_t> values(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e)
    values[static_cast<std::size_t>(e)] = (mask >> e) & 1 ? -1 : +1;
  return make_coloring(std::move(values));
}

// Exact minimum prefix discrepancy over every coloring, no symmetry
// reduction. Only for small n.
inline int brute_min_disc(const PermutationFamily& f) {
  int best = f.n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.n); ++mask)
    best = std::min(best, brute_prefix_disc(f, coloring_from_mask(mask, f.n)));
  return best;
}

// Dense tensor-product construction: materializes M_i^(tensor k) as an
// actual 0/1 matrix and applies it to (1..n). Memory grows as 9^k, so this
// route is only used for k <= 5.
inline std::vector<int> dense_tensor_perm(int k, int perm, std::string_view variant) {
  // 3x3 shift matrices: row r of M has its 1 in column sigma(r).
  auto sigma1 = [](int r, char) { return r; };
  auto sigma2 = [](int r, char d) { return d == 'R' ? (r + 2) % 3 : (r + 1) % 3; };
  auto sigma3 = [](int r, char d) { return d == 'R' ? (r + 1) % 3 : (r + 2) % 3; };

  std::vector<std::vector<std::uint8_t>> m{{1}};
  for (int h = static_cast<int>(variant.size()) - 1; h >= 0; --h) {
    const char d = variant[static_cast<std::size_t>(h)];
    const int sz = static_cast<int>(m.size());
    std::vector<std::vector<std::uint8_t>> next(
        static_cast<std::size_t>(3 * sz),
        std::vector<std::uint8_t>(static_cast<std::size_t>(3 * sz), 0));
    for (int br = 0; br < 3; ++br) {
      const int bc = perm == 0 ? sigma1(br, d) : perm == 1 ? sigma2(br, d) : sigma3(br, d);
      for (int r = 0; r < sz; ++r)
        for (int col = 0; col < sz; ++col)
          next[static_cast<std::size_t>(br * sz + r)]
              [static_cast<std::size_t>(bc * sz + col)] =
                  m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    }
    m = std::move(next);
  }
  const int n = static_cast<int>(m.size());
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])
        out[static_cast<std::size_t>(r)] += col + 1;
  (void)k;
  return out;
}

// Arbitrary (non-constructed) instance: three independent shuffles.
inline PermutationFamily random_family(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<std::vector<int>, 3> rows;
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) row[static_cast<std::size_t>(p)] = p + 1;
    std::shuffle(row.begin(), row.end(), rng);
  }
  return family_from_perms(std::move(rows));
}

inline Coloring random_coloring(int n, std::mt19937_64& rng) {
  std::vector<std::int8_t> values(static_cast<std::size_t>(n));
  for (auto& v : values) v = rng() & 1 ? +1 : -1;
  return make_coloring(std::move(values));
}

}  // namespace permdisc::testing
