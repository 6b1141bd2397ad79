#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"
#include "permdisc/solver.hpp"

namespace permdisc {

enum class Claim { theorem1, lemma2, corollary3, identity, variants };
enum class SweepMode { exhaustive, sample };
enum class TheoremMethod { oracle, decide };

struct Violation {
  Coloring coloring;
  std::string details;
};

/// Pass/fail outcome of one verification sweep. violations == 0 means pass;
/// `inconclusive` marks a budget-exhausted underlying search (no claim is
/// made either way). All fields except wall_time are reproducible
/// bit-for-bit given (claim, k, mode, samples, seed, workers).
struct VerificationReport {
  Claim claim = Claim::theorem1;
  int k = 0;
  std::string variant;  // direction word the sweep ran on
  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Violation> first_violation;
  std::chrono::milliseconds wall_time{0};
  std::optional<std::uint64_t> seed;
  int workers = 1;
  /// Work reduction applied by an exhaustive sweep (empty if none). The
  /// claim sets here are closed under coloring negation, so sweeps pin
  /// chi(1) = +1 and cover each {chi, -chi} pair at once.
  std::string reduction;
  bool inconclusive = false;

  // theorem1 extras
  std::optional<TheoremMethod> method;
  std::optional<int> bound;
  std::optional<int> exact_value;  // oracle method only

  // variants: one sub-report per direction word, theorem first then lemma2.
  std::vector<VerificationReport> per_variant;

  bool pass() const { return violations == 0 && !inconclusive; }
};

struct VerifyOptions {
  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1729;
  int workers = 1;
  SolverConfig solver;  // budgets for theorem checks
};

/// Checks disc(S_k) >= ceil(k/3 + 1) by complete search: exact minimum via
/// the enumeration oracle (3^k <= 30), or infeasibility of the decision
/// problem at t = bound - 1.
VerificationReport verify_theorem(int k, TheoremMethod method,
                                  const VerifyOptions& opts = {});
VerificationReport verify_theorem(const PermutationFamily& f, TheoremMethod method,
                                  const VerifyOptions& opts = {});

/// Sweeps colorings checking the matching-sign bounds: total >= 1 requires
/// l_plus, r_plus >= k + delta + 2; total <= -1 requires l_minus, r_minus
/// <= -(k + delta + 2). Exhaustive mode (3^k <= 27) enumerates the half
/// space chi(1) = +1, covering each negation pair; sample mode draws
/// counter-based seeded colorings and checks the pair explicitly.
VerificationReport verify_lemma2(int k, const VerifyOptions& opts = {});
VerificationReport verify_lemma2(const PermutationFamily& f,
                                 const VerifyOptions& opts = {});

/// Same sweep for the mismatched-sign bounds (total >= 1 requires l_minus,
/// r_minus <= -(k - 2*delta + 2), mirrored for negative totals), plus an
/// independent exact check of the complement identities
/// r_minus + l_plus = r_plus + l_minus = 3 * total.
VerificationReport verify_corollary(int k, const VerifyOptions& opts = {});
VerificationReport verify_corollary(const PermutationFamily& f,
                                    const VerifyOptions& opts = {});

/// The complement identities alone, as exact integer equalities.
VerificationReport verify_identity(int k, const VerifyOptions& opts = {});

/// Runs verify_theorem and verify_lemma2 on all 2^k direction-word
/// families (3^k <= 27). Violations on non-canonical families are findings
/// about a conjecture, not implementation failures; they are reported per
/// variant so callers can surface them distinctly.
VerificationReport verify_variants(int k, const VerifyOptions& opts = {});

std::string claim_name(Claim claim);

/// One-line human rendering, e.g. for CLI output.
std::string summary_line(const VerificationReport& report);

}  // namespace permdisc
