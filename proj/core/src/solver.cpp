#include "permdisc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "permdisc/enumeration.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/random.hpp"

namespace permdisc {

namespace {

using Clock = std::chrono::steady_clock;

struct ExactPartial {
  int best = INT32_MAX;
  std::optional<Coloring> witness;
  std::uint64_t evaluated = 0;
  bool interrupted = false;
};

// One worker's share of the exact enumeration: all subcubes whose leading
// pattern index is congruent to `worker` mod `workers`. Workers keep local
// pruning bounds only, so the merged result does not depend on timing.
ExactPartial exact_worker(const PermutationFamily& f, int bits, int worker,
                          int workers, std::uint64_t budget, Clock::time_point deadline,
                          bool has_deadline) {
  ExactPartial out;
  std::vector<std::int8_t> fixed;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
    if (pattern % static_cast<std::uint64_t>(workers) !=
        static_cast<std::uint64_t>(worker))
      continue;
    fixed.assign(1, +1);  // chi(1) = +1 by negation symmetry
    for (int b = 0; b < bits; ++b)
      fixed.push_back((pattern >> b) & 1 ? -1 : +1);

    const bool finished = for_each_coloring_gray(
        f, fixed, [&](const Coloring& c, const PrefixProfile& profile) {
          ++out.evaluated;
          int cur = 0;
          for (int i = 0; i < 3 && cur < out.best; ++i) {
            const int* sums = profile.sums[static_cast<std::size_t>(i)].data();
            for (int x = 1; x <= f.n; ++x) {
              const int a = sums[x] < 0 ? -sums[x] : sums[x];
              if (a > cur) {
                cur = a;
                if (cur >= out.best) break;
              }
            }
          }
          if (cur < out.best) {
            out.best = cur;
            out.witness = c;
          }
          if (budget && out.evaluated >= budget) return false;
          if (has_deadline && (out.evaluated & 0xFFF) == 0 && Clock::now() >= deadline)
            return false;
          return true;
        });
    if (!finished) {
      out.interrupted = true;
      break;
    }
  }
  return out;
}

enum class SearchStatus { exhausted, found, stopped };

// Backtracking decide-mode search over one subtree.
struct DecideSearch {
  const PermutationFamily& f;
  int n;
  int t;
  const std::vector<int>& order;
  std::uint64_t budget;  // 0 = unlimited
  Clock::time_point deadline;
  bool has_deadline = false;

  std::array<std::vector<int>, 3> partial;     // partial[i][x]: assigned sum in prefix x
  std::array<std::vector<int>, 3> unassigned;  // unassigned[i][x]: open slots in prefix x
  std::vector<std::int8_t> signs;              // by element, 0 = unassigned
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::optional<Coloring> witness;

  explicit DecideSearch(const PermutationFamily& family, int threshold,
                        const std::vector<int>& assign_order)
      : f(family), n(family.n), t(threshold), order(assign_order) {
    for (int i = 0; i < 3; ++i) {
      partial[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n) + 1, 0);
      unassigned[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n) + 1);
      std::iota(unassigned[static_cast<std::size_t>(i)].begin(),
                unassigned[static_cast<std::size_t>(i)].end(), 0);
    }
    signs.assign(static_cast<std::size_t>(n), 0);
  }

  // Applies one assignment and checks every affected prefix: the completed
  // ones must lie in [-t, t]; the open ones must still reach the band given
  // their remaining slots and the forced parity of the final sum.
  bool assign(int element, int sign) {
    ++nodes;
    if (budget && nodes >= budget) out_of_budget = true;
    if (has_deadline && (nodes & 0xFFF) == 0 && Clock::now() >= deadline)
      out_of_budget = true;
    signs[static_cast<std::size_t>(element - 1)] = static_cast<std::int8_t>(sign);
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const int p = f.positions[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(element - 1)];
      int* s = partial[static_cast<std::size_t>(i)].data();
      int* r = unassigned[static_cast<std::size_t>(i)].data();
      for (int x = p; x <= n; ++x) {
        s[x] += sign;
        r[x] -= 1;
        const int reach = s[x] + r[x];
        int lo = std::max(s[x] - r[x], -t);
        const int hi = std::min(reach, t);
        if (((lo ^ reach) & 1) != 0) ++lo;  // final sum has the parity of s + r
        if (lo > hi) ok = false;
      }
    }
    return ok;
  }

  void unassign(int element, int sign) {
    signs[static_cast<std::size_t>(element - 1)] = 0;
    for (int i = 0; i < 3; ++i) {
      const int p = f.positions[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(element - 1)];
      int* s = partial[static_cast<std::size_t>(i)].data();
      int* r = unassigned[static_cast<std::size_t>(i)].data();
      for (int x = p; x <= n; ++x) {
        s[x] -= sign;
        r[x] += 1;
      }
    }
  }

  SearchStatus run(int depth) {
    if (out_of_budget) return SearchStatus::stopped;
    if (depth == n) {
      std::vector<std::int8_t> values(signs.begin(), signs.end());
      witness = make_coloring(std::move(values));
      return SearchStatus::found;
    }
    const int element = order[static_cast<std::size_t>(depth)];
    for (int sign : {+1, -1}) {
      const bool viable = assign(element, sign);
      if (viable) {
        const SearchStatus st = run(depth + 1);
        if (st != SearchStatus::exhausted) {
          unassign(element, sign);
          return st;
        }
      }
      unassign(element, sign);
      if (out_of_budget) return SearchStatus::stopped;
    }
    return SearchStatus::exhausted;
  }
};

struct DecidePartial {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

DecidePartial decide_worker(const PermutationFamily& f, int t,
                            const std::vector<int>& order, int bits, int worker,
                            int workers, std::uint64_t budget,
                            Clock::time_point deadline, bool has_deadline) {
  DecidePartial out;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
    if (pattern % static_cast<std::uint64_t>(workers) !=
        static_cast<std::uint64_t>(worker))
      continue;
    DecideSearch search(f, t, order);
    search.budget = budget ? budget - std::min(budget, out.nodes) : 0;
    if (budget && search.budget == 0) {
      out.status = SearchStatus::stopped;
      return out;
    }
    search.deadline = deadline;
    search.has_deadline = has_deadline;

    // Pin the first element to +1 (negation symmetry), then the worker's
    // leading pattern; a contradiction during pinning just closes this
    // subtree.
    bool viable = search.assign(order[0], +1);
    int pinned = 1;
    for (int b = 0; viable && b < bits; ++b) {
      viable = search.assign(order[static_cast<std::size_t>(1 + b)],
                             (pattern >> b) & 1 ? -1 : +1);
      ++pinned;
    }
    SearchStatus st = SearchStatus::exhausted;
    if (viable) st = search.run(pinned);
    if (!viable && search.out_of_budget) st = SearchStatus::stopped;
    out.nodes += search.nodes;
    if (st == SearchStatus::found) {
      out.status = SearchStatus::found;
      out.witness = search.witness;
      return out;
    }
    if (st == SearchStatus::stopped) out.status = SearchStatus::stopped;
  }
  return out;
}

std::vector<int> resolve_order(const PermutationFamily& f, const SolverConfig& config) {
  if (config.assignment_order.empty()) {
    std::vector<int> order(static_cast<std::size_t>(f.n));
    std::iota(order.begin(), order.end(), 1);
    return order;
  }
  std::vector<int> order = config.assignment_order;
  std::vector<char> seen(static_cast<std::size_t>(f.n), 0);
  if (static_cast<int>(order.size()) != f.n)
    throw std::invalid_argument("assignment order length does not match n");
  for (int e : order) {
    if (e < 1 || e > f.n || seen[static_cast<std::size_t>(e - 1)])
      throw std::invalid_argument("assignment order is not a permutation of 1..n");
    seen[static_cast<std::size_t>(e - 1)] = 1;
  }
  return order;
}

int clamp_workers(int workers) { return std::max(1, workers); }

}  // namespace

SolveOutcome exhaustive_min_disc(const PermutationFamily& f, const SolverConfig& config) {
  if (f.n > 30)
    throw std::invalid_argument(
        "exhaustive_min_disc enumerates 2^(n-1) colorings and refuses n > 30 "
        "(got n = " + std::to_string(f.n) + "); use decide_disc_at_most");
  const auto start = Clock::now();
  const bool has_deadline = config.time_budget.count() > 0;
  const auto deadline = start + config.time_budget;

  const int workers = std::min(clamp_workers(config.workers), std::max(1, f.n - 1));
  const int bits = partition_bits(f.n - 1, workers);
  const std::uint64_t per_worker_budget =
      config.node_budget ? std::max<std::uint64_t>(1, config.node_budget /
                                                          static_cast<std::uint64_t>(workers))
                         : 0;

  std::vector<ExactPartial> partials(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partials[0] = exact_worker(f, bits, 0, 1, per_worker_budget, deadline, has_deadline);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        partials[static_cast<std::size_t>(w)] = exact_worker(
            f, bits, w, workers, per_worker_budget, deadline, has_deadline);
      });
    for (auto& th : threads) th.join();
  }

  SolveOutcome out;
  out.mode = SolveMode::exact;
  ExactPartial merged;
  for (const auto& p : partials) {
    merged.evaluated += p.evaluated;
    merged.interrupted = merged.interrupted || p.interrupted;
    if (p.best < merged.best ||
        (p.best == merged.best && p.witness && merged.witness &&
         to_string(*p.witness) < to_string(*merged.witness))) {
      merged.best = p.best;
      merged.witness = p.witness;
    }
  }
  out.value = merged.best;
  out.witness_coloring = merged.witness;
  out.nodes_explored = merged.evaluated;
  out.feasible = merged.interrupted ? Feasibility::indeterminate : Feasibility::feasible;
  out.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

SolveOutcome decide_disc_at_most(const PermutationFamily& f, int t,
                                 const SolverConfig& config) {
  if (t < 1) throw std::invalid_argument("decision threshold t must be >= 1");
  const auto start = Clock::now();
  const bool has_deadline = config.time_budget.count() > 0;
  const auto deadline = start + config.time_budget;
  const std::vector<int> order = resolve_order(f, config);

  const int workers = std::min(clamp_workers(config.workers), std::max(1, f.n - 1));
  const int bits = partition_bits(f.n - 1, workers);
  const std::uint64_t per_worker_budget =
      config.node_budget ? std::max<std::uint64_t>(1, config.node_budget /
                                                          static_cast<std::uint64_t>(workers))
                         : 0;

  std::vector<DecidePartial> partials(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partials[0] = decide_worker(f, t, order, bits, 0, 1, per_worker_budget, deadline,
                                has_deadline);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        partials[static_cast<std::size_t>(w)] =
            decide_worker(f, t, order, bits, w, workers, per_worker_budget, deadline,
                          has_deadline);
      });
    for (auto& th : threads) th.join();
  }

  SolveOutcome out;
  out.mode = SolveMode::decide;
  out.value = t;
  bool any_stopped = false;
  for (const auto& p : partials) {
    out.nodes_explored += p.nodes;
    if (p.status == SearchStatus::stopped) any_stopped = true;
    if (p.status == SearchStatus::found && !out.witness_coloring)
      out.witness_coloring = p.witness;  // lowest worker index wins
  }
  if (out.witness_coloring)
    out.feasible = Feasibility::feasible;
  else if (any_stopped)
    out.feasible = Feasibility::indeterminate;
  else
    out.feasible = Feasibility::infeasible;
  out.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

Coloring heuristic_coloring(const PermutationFamily& f, HeuristicStrategy strategy,
                            std::uint64_t seed) {
  if (strategy == HeuristicStrategy::random) return sample_coloring(seed, 0, f.n);

  // greedy-balance: pick the sign whose resulting maximum |partial prefix
  // sum| over all three permutations is smaller; ties go to +1.
  std::array<std::vector<int>, 3> partial;
  for (auto& v : partial) v.assign(static_cast<std::size_t>(f.n) + 1, 0);
  std::vector<std::int8_t> values(static_cast<std::size_t>(f.n), 0);

  for (int e = 1; e <= f.n; ++e) {
    int cost[2] = {0, 0};  // candidate +1, candidate -1
    for (int which = 0; which < 2; ++which) {
      const int sign = which == 0 ? +1 : -1;
      int worst = 0;
      for (int i = 0; i < 3; ++i) {
        const int p = f.positions[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(e - 1)];
        const int* s = partial[static_cast<std::size_t>(i)].data();
        for (int x = 1; x <= f.n; ++x) {
          const int v = s[x] + (x >= p ? sign : 0);
          worst = std::max(worst, v < 0 ? -v : v);
        }
      }
      cost[which] = worst;
    }
    const int sign = cost[0] <= cost[1] ? +1 : -1;
    values[static_cast<std::size_t>(e - 1)] = static_cast<std::int8_t>(sign);
    for (int i = 0; i < 3; ++i) {
      const int p = f.positions[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(e - 1)];
      int* s = partial[static_cast<std::size_t>(i)].data();
      for (int x = p; x <= f.n; ++x) s[x] += sign;
    }
  }
  return make_coloring(std::move(values));
}

}  // namespace permdisc
