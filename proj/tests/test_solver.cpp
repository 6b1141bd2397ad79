#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/solver.hpp"

using namespace permdisc;
using permdisc::testing::brute_min_disc;
using permdisc::testing::random_family;

namespace {

// Exact value plus full decide-mode agreement across the threshold range.
void cross_validate(const PermutationFamily& f, const SolverConfig& config = {}) {
  const SolveOutcome exact = exhaustive_min_disc(f, config);
  REQUIRE(exact.complete());
  REQUIRE(exact.witness_coloring.has_value());
  REQUIRE(prefix_system_discrepancy(f, *exact.witness_coloring).value == exact.value);

  for (int t = 1; t <= exact.value + 1; ++t) {
    const SolveOutcome decision = decide_disc_at_most(f, t, config);
    REQUIRE(decision.complete());
    const bool expect_feasible = t >= exact.value;
    REQUIRE((decision.feasible == Feasibility::feasible) == expect_feasible);
    if (expect_feasible) {
      REQUIRE(decision.witness_coloring.has_value());
      REQUIRE(prefix_system_discrepancy(f, *decision.witness_coloring).value <= t);
    }
  }
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("S_1: exact minimum 2, witness valid") {
  const auto f = build_family(1);
  const auto out = exhaustive_min_disc(f);
  CHECK(out.value == 2);
  CHECK(out.nodes_explored == 4);  // 2^(n-1) with chi(1) fixed
  CHECK(out.complete());
  CHECK(prefix_system_discrepancy(f, *out.witness_coloring).value == 2);
  CHECK(out.value == brute_min_disc(f));
}

TEST_CASE("S_2: oracle agrees with full-space brute force and the bound") {
  const auto f = build_family(2);
  const auto out = exhaustive_min_disc(f);
  CHECK(out.nodes_explored == 256);
  CHECK(out.value == brute_min_disc(f));  // also validates the chi(1)=+1 reduction
  CHECK(out.value >= 2);
}

TEST_CASE("decide: S_1 infeasible at 1, feasible at 2") {
  const auto f = build_family(1);
  CHECK(decide_disc_at_most(f, 1).feasible == Feasibility::infeasible);
  const auto at2 = decide_disc_at_most(f, 2);
  CHECK(at2.feasible == Feasibility::feasible);
  CHECK(prefix_system_discrepancy(f, *at2.witness_coloring).value <= 2);
}

TEST_CASE("decide: S_3 infeasible at 1") {
  const auto out = decide_disc_at_most(build_family(3), 1);
  CHECK(out.feasible == Feasibility::infeasible);
  CHECK(out.complete());
}

TEST_CASE("cross-validation on canonical families k <= 2 and variants") {
  for (int k = 0; k <= 2; ++k) cross_validate(build_family(k));
  cross_validate(build_family(2, "RL"));
  cross_validate(build_family(2, "LL"));
}

TEST_CASE("cross-validation on random instances") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    cross_validate(random_family(8 + static_cast<int>(seed), seed));
}

TEST_CASE("monotonicity of the decision") {
  const auto f = random_family(12, 40);
  bool seen_feasible = false;
  for (int t = 1; t <= 6; ++t) {
    const bool feasible = decide_disc_at_most(f, t).feasible == Feasibility::feasible;
    if (seen_feasible) REQUIRE(feasible);
    seen_feasible = seen_feasible || feasible;
  }
  REQUIRE(seen_feasible);
}

TEST_CASE("value invariant under negation and row relabeling") {
  auto f = random_family(10, 8);
  const int value = exhaustive_min_disc(f).value;
  CHECK(value == brute_min_disc(f));  // brute force covers both signs
  std::swap(f.perms[0], f.perms[2]);
  std::swap(f.positions[0], f.positions[2]);
  CHECK(exhaustive_min_disc(f).value == value);
}

TEST_CASE("multi-worker runs reproduce the single-worker value") {
  const auto f = build_family(2);
  SolverConfig parallel;
  parallel.workers = 4;
  const auto seq = exhaustive_min_disc(f);
  const auto par = exhaustive_min_disc(f, parallel);
  CHECK(par.value == seq.value);
  CHECK(par.nodes_explored == seq.nodes_explored);
  CHECK(decide_disc_at_most(f, 1, parallel).feasible ==
        decide_disc_at_most(f, 1).feasible);
  CHECK(decide_disc_at_most(f, 2, parallel).feasible == Feasibility::feasible);
}

TEST_CASE("budget exhaustion is indeterminate, not infeasible") {
  SolverConfig tiny;
  tiny.node_budget = 5;
  const auto decided = decide_disc_at_most(build_family(2), 1, tiny);
  CHECK(decided.feasible == Feasibility::indeterminate);
  CHECK_FALSE(decided.complete());

  const auto exact = exhaustive_min_disc(build_family(2), tiny);
  CHECK(exact.feasible == Feasibility::indeterminate);
}

TEST_CASE("refusals and argument validation") {
  CHECK_THROWS_AS(exhaustive_min_disc(random_family(31, 1)), std::invalid_argument);
  CHECK_THROWS_AS(decide_disc_at_most(build_family(1), 0), std::invalid_argument);
  SolverConfig bad;
  bad.assignment_order = {1, 1, 2};
  CHECK_THROWS_AS(decide_disc_at_most(build_family(1), 1, bad), std::invalid_argument);
}

TEST_CASE("alternative assignment orders reach the same decision") {
  const auto f = build_family(2);
  SolverConfig reversed;
  for (int e = f.n; e >= 1; --e) reversed.assignment_order.push_back(e);
  CHECK(decide_disc_at_most(f, 1, reversed).feasible == Feasibility::infeasible);
  CHECK(decide_disc_at_most(f, 2, reversed).feasible == Feasibility::feasible);
}

TEST_CASE("heuristics: determinism, k=1 quality, theorem floor") {
  const auto f1 = build_family(1);
  const auto greedy1 = heuristic_coloring(f1, HeuristicStrategy::greedy_balance, 0);
  CHECK(prefix_system_discrepancy(f1, greedy1).value <= 2);
  CHECK(greedy1 == coloring_from_string("+-+"));  // documented trace

  for (int k = 1; k <= 8; ++k) {
    const auto f = build_family(k);
    const auto greedy = heuristic_coloring(f, HeuristicStrategy::greedy_balance, 0);
    const int bound = (k + 5) / 3;  // no coloring can beat the proven bound
    CHECK(prefix_system_discrepancy(f, greedy).value >= bound);

    const auto r1 = heuristic_coloring(f, HeuristicStrategy::random, 99);
    const auto r2 = heuristic_coloring(f, HeuristicStrategy::random, 99);
    const auto r3 = heuristic_coloring(f, HeuristicStrategy::random, 100);
    CHECK(r1 == r2);
    if (f.n > 3) CHECK_FALSE(r1 == r3);
  }
}

}  // TEST_SUITE
