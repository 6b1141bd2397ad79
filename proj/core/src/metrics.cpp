#include "permdisc/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace permdisc {

namespace {

void require_same_length(const PermutationFamily& f, const Coloring& c) {
  if (c.n() != f.n)
    throw std::invalid_argument("coloring length " + std::to_string(c.n()) +
                                " does not match family size " +
                                std::to_string(f.n));
}

}  // namespace

PrefixProfile prefix_profile(const PermutationFamily& f, const Coloring& c) {
  require_same_length(f, c);
  PrefixProfile profile;
  for (int i = 0; i < 3; ++i) {
    auto& sums = profile.sums[i];
    sums.resize(static_cast<std::size_t>(f.n) + 1);
    sums[0] = 0;
    int s = 0;
    const auto& perm = f.perms[i];
    for (int x = 1; x <= f.n; ++x) {
      s += c.values[static_cast<std::size_t>(perm[x - 1] - 1)];
      sums[static_cast<std::size_t>(x)] = s;
    }
  }
  return profile;
}

void flip_element(PrefixProfile& profile, const PermutationFamily& f,
                  Coloring& c, int element) {
  auto& v = c.values[static_cast<std::size_t>(element - 1)];
  const int delta = -2 * v;
  v = static_cast<std::int8_t>(-v);
  c.total += delta;
  for (int i = 0; i < 3; ++i) {
    const int p = f.positions[i][static_cast<std::size_t>(element - 1)];
    int* sums = profile.sums[i].data();
    for (int x = p; x <= f.n; ++x) sums[x] += delta;
  }
}

DiscQuadruple disc_quadruple(const PermutationFamily& f, const Coloring& c) {
  require_same_length(f, c);
  DiscQuadruple q;

  // Left functionals: per-permutation extrema of the running prefix sums,
  // x in [0, n], smallest maximizer/minimizer kept.
  for (int i = 0; i < 3; ++i) {
    int s = 0, best_max = 0, best_min = 0, arg_max = 0, arg_min = 0;
    const auto& perm = f.perms[i];
    for (int x = 1; x <= f.n; ++x) {
      s += c.values[static_cast<std::size_t>(perm[x - 1] - 1)];
      if (s > best_max) {
        best_max = s;
        arg_max = x;
      }
      if (s < best_min) {
        best_min = s;
        arg_min = x;
      }
    }
    q.l_plus += best_max;
    q.l_minus += best_min;
    q.l_plus_cuts[static_cast<std::size_t>(i)] = arg_max;
    q.l_minus_cuts[static_cast<std::size_t>(i)] = arg_min;
  }

  // Right functionals by an independent suffix accumulation, y in [1, n+1]
  // (y = n+1 is the empty suffix). Scanning y downward with >= / <= keeps
  // the smallest cut on ties.
  for (int i = 0; i < 3; ++i) {
    int s = 0, best_max = 0, best_min = 0, arg_max = f.n + 1, arg_min = f.n + 1;
    const auto& perm = f.perms[i];
    for (int y = f.n; y >= 1; --y) {
      s += c.values[static_cast<std::size_t>(perm[y - 1] - 1)];
      if (s >= best_max) {
        best_max = s;
        arg_max = y;
      }
      if (s <= best_min) {
        best_min = s;
        arg_min = y;
      }
    }
    q.r_plus += best_max;
    q.r_minus += best_min;
    q.r_plus_cuts[static_cast<std::size_t>(i)] = arg_max;
    q.r_minus_cuts[static_cast<std::size_t>(i)] = arg_min;
  }
  return q;
}

DiscQuadruple disc_quadruple(const PermutationFamily& f, const Coloring& c,
                             const PrefixProfile& profile) {
  require_same_length(f, c);
  DiscQuadruple q;
  for (int i = 0; i < 3; ++i) {
    const auto& sums = profile.sums[i];
    int best_max = 0, best_min = 0, arg_max = 0, arg_min = 0;
    for (int x = 1; x <= f.n; ++x) {
      const int s = sums[static_cast<std::size_t>(x)];
      if (s > best_max) {
        best_max = s;
        arg_max = x;
      }
      if (s < best_min) {
        best_min = s;
        arg_min = x;
      }
    }
    q.l_plus += best_max;
    q.l_minus += best_min;
    q.l_plus_cuts[static_cast<std::size_t>(i)] = arg_max;
    q.l_minus_cuts[static_cast<std::size_t>(i)] = arg_min;

    // Suffix value starting at y is total - P(y-1).
    const int total = sums[static_cast<std::size_t>(f.n)];
    int smax = 0, smin = 0, sarg_max = f.n + 1, sarg_min = f.n + 1;
    for (int y = f.n; y >= 1; --y) {
      const int s = total - sums[static_cast<std::size_t>(y - 1)];
      if (s >= smax) {
        smax = s;
        sarg_max = y;
      }
      if (s <= smin) {
        smin = s;
        sarg_min = y;
      }
    }
    q.r_plus += smax;
    q.r_minus += smin;
    q.r_plus_cuts[static_cast<std::size_t>(i)] = sarg_max;
    q.r_minus_cuts[static_cast<std::size_t>(i)] = sarg_min;
  }
  return q;
}

PrefixDisc prefix_system_discrepancy(const PermutationFamily& f, const Coloring& c) {
  require_same_length(f, c);
  PrefixDisc out;
  out.perm = 1;
  out.x = 1;
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    const auto& perm = f.perms[i];
    for (int x = 1; x <= f.n; ++x) {
      s += c.values[static_cast<std::size_t>(perm[x - 1] - 1)];
      const int a = s < 0 ? -s : s;
      if (a > out.value) {
        out.value = a;
        out.perm = i + 1;
        out.x = x;
      }
    }
  }
  return out;
}

int interval_system_discrepancy(const PermutationFamily& f, const Coloring& c) {
  require_same_length(f, c);
  int best = 0;
  for (int i = 0; i < 3; ++i) {
    int s = 0, mx = 0, mn = 0;
    const auto& perm = f.perms[i];
    for (int x = 1; x <= f.n; ++x) {
      s += c.values[static_cast<std::size_t>(perm[x - 1] - 1)];
      if (s > mx) mx = s;
      if (s < mn) mn = s;
    }
    best = std::max(best, mx - mn);
  }
  return best;
}

}  // namespace permdisc
