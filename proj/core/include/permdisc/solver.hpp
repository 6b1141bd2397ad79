#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"

namespace permdisc {

struct SolverConfig {
  /// Search budget: colorings evaluated (exact mode) or assignments made
  /// (decide mode). 0 means unlimited. Split statically across workers, so
  /// outcomes are deterministic for a fixed worker count.
  std::uint64_t node_budget = 0;
  /// Wall-clock budget; 0 means unlimited. Unlike the node budget this is
  /// inherently non-deterministic, so it defaults off.
  std::chrono::milliseconds time_budget{0};
  int workers = 1;
  /// decide-mode element assignment order; empty means ground-set order
  /// 1..n. Must be a permutation of [1..n] when given.
  std::vector<int> assignment_order;
};

enum class SolveMode { exact, decide };

/// Decide-mode answer. `indeterminate` marks a budget-exhausted search and
/// is deliberately distinct from `infeasible`: lower-bound claims are made
/// only from complete searches.
enum class Feasibility { feasible, infeasible, indeterminate };

struct SolveOutcome {
  SolveMode mode = SolveMode::exact;
  int value = 0;  // exact: minimum discrepancy; decide: the threshold t
  Feasibility feasible = Feasibility::indeterminate;
  std::optional<Coloring> witness_coloring;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds wall_time{0};

  bool complete() const { return feasible != Feasibility::indeterminate; }
};

/// Exact minimum prefix-system discrepancy by complete enumeration, using
/// the negation symmetry chi(1) = +1 and single-flip incremental profile
/// updates in reflected Gray-code order. Hard cap n <= 30; larger inputs
/// are refused with std::invalid_argument.
///
/// In the outcome, `feasible` is `feasible` when the enumeration completed
/// (the value is then certified) and `indeterminate` if a budget stopped it
/// early (the value is then only an upper bound).
SolveOutcome exhaustive_min_disc(const PermutationFamily& f,
                                 const SolverConfig& config = {});

/// Complete backtracking search for a coloring whose prefix-system
/// discrepancy is <= t (t >= 1). Elements are assigned in ground-set order
/// (or config.assignment_order); every branch where a completed prefix
/// leaves [-t, t], or where band/parity reachability rules out some future
/// prefix, is pruned. An exhausted search certifies disc > t.
SolveOutcome decide_disc_at_most(const PermutationFamily& f, int t,
                                 const SolverConfig& config = {});

enum class HeuristicStrategy { random, greedy_balance };

/// Baseline colorings for gap reporting. `random` draws i.i.d. signs from
/// the seeded generator; `greedy_balance` processes elements in ground-set
/// order, giving each the sign that minimizes the maximum absolute partial
/// prefix sum across the three permutations (ties to +1). Deterministic
/// given (strategy, seed).
Coloring heuristic_coloring(const PermutationFamily& f, HeuristicStrategy strategy,
                            std::uint64_t seed);

}  // namespace permdisc
