#include "permdisc/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permdisc/enumeration.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/random.hpp"

namespace permdisc {

namespace {

using Clock = std::chrono::steady_clock;

int theorem_bound(int k) { return (k + 5) / 3; }  // ceil(k/3 + 1)

void require_odd_ground_set(const PermutationFamily& f) {
  // The bound claims quantify over colorings with |total| >= 1; an even
  // ground set would make total = 0 possible and the claims vacuous.
  if (f.n % 2 == 0)
    throw std::invalid_argument("verification sweeps need an odd ground set");
}

void require_exhaustible(const PermutationFamily& f) {
  if (f.n > 27)
    throw std::invalid_argument("exhaustive sweeps are capped at n <= 27; use sample mode");
}

// Violation ordering: sample sweeps keep the smallest sample index (worker
// split invariant); exhaustive sweeps keep the lexicographically smallest
// coloring.
struct SweepPartial {
  bool by_index = false;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Violation> first;
  std::uint64_t first_index = 0;

  void record(const Coloring& c, std::string details, std::uint64_t index) {
    ++violations;
    const bool better =
        !first || (by_index ? index < first_index
                            : to_string(c) < to_string(first->coloring));
    if (better) {
      first = Violation{c, std::move(details)};
      first_index = index;
    }
  }
};

SweepPartial merge(std::vector<SweepPartial> partials) {
  SweepPartial out;
  for (auto& p : partials) {
    out.by_index = p.by_index;
    out.checked += p.checked;
    out.violations += p.violations;
    if (!p.first) continue;
    const bool take =
        !out.first ||
        (p.by_index ? p.first_index < out.first_index
                    : to_string(p.first->coloring) < to_string(out.first->coloring));
    if (take) {
      out.first = std::move(p.first);
      out.first_index = p.first_index;
    }
  }
  return out;
}

// Exhaustive sweep over the half space chi(1) = +1 in Gray order.
// Kernel: (const Coloring&, const PrefixProfile&) -> std::optional<std::string>.
template <class Kernel>
SweepPartial exhaustive_sweep(const PermutationFamily& f, int workers, Kernel kernel) {
  workers = std::max(1, std::min(workers, std::max(1, f.n - 1)));
  const int bits = partition_bits(f.n - 1, workers);

  auto run_one = [&](int worker) {
    SweepPartial out;
    out.by_index = false;
    std::vector<std::int8_t> fixed;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
      if (pattern % static_cast<std::uint64_t>(workers) !=
          static_cast<std::uint64_t>(worker))
        continue;
      fixed.assign(1, +1);
      for (int b = 0; b < bits; ++b)
        fixed.push_back((pattern >> b) & 1 ? -1 : +1);
      for_each_coloring_gray(f, fixed,
                             [&](const Coloring& c, const PrefixProfile& profile) {
                               ++out.checked;
                               if (auto details = kernel(c, profile))
                                 out.record(c, std::move(*details), 0);
                               return true;
                             });
    }
    return out;
  };

  std::vector<SweepPartial> partials(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partials[0] = run_one(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { partials[static_cast<std::size_t>(w)] = run_one(w); });
    for (auto& th : threads) th.join();
  }
  return merge(std::move(partials));
}

// Seeded counter-based sample sweep; violations keep the smallest sample
// index, so the result is independent of the worker split.
// Kernel: (const Coloring&) -> std::optional<std::string>.
template <class Kernel>
SweepPartial sample_sweep(const PermutationFamily& f, std::uint64_t samples,
                          std::uint64_t seed, int workers, Kernel kernel) {
  workers = std::max(1, workers);
  const std::uint64_t chunk = (samples + static_cast<std::uint64_t>(workers) - 1) /
                              static_cast<std::uint64_t>(workers);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    SweepPartial out;
    out.by_index = true;
    for (std::uint64_t j = begin; j < end; ++j) {
      const Coloring c = sample_coloring(seed, j, f.n);
      ++out.checked;
      if (auto details = kernel(c)) out.record(c, std::move(*details), j);
    }
    return out;
  };

  std::vector<SweepPartial> partials(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partials[0] = run_range(0, samples);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(samples, chunk * static_cast<std::uint64_t>(w));
      const std::uint64_t end = std::min(samples, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        partials[static_cast<std::size_t>(w)] = run_range(begin, end);
      });
    }
    for (auto& th : threads) th.join();
  }
  return merge(std::move(partials));
}

struct ProfileExtrema {
  int sum_max = 0;  // sum over permutations of max_x P_i(x)  (= l_plus)
  int sum_min = 0;  // sum over permutations of min_x P_i(x)  (= l_minus)
};

ProfileExtrema profile_extrema(const PrefixProfile& profile, int n) {
  ProfileExtrema e;
  for (int i = 0; i < 3; ++i) {
    const int* sums = profile.sums[static_cast<std::size_t>(i)].data();
    int mx = 0, mn = 0;
    for (int x = 1; x <= n; ++x) {
      if (sums[x] > mx) mx = sums[x];
      if (sums[x] < mn) mn = sums[x];
    }
    e.sum_max += mx;
    e.sum_min += mn;
  }
  return e;
}

// Suffix-functional extrema by right-to-left accumulation over the
// permutations themselves; the independent route for the identity checks.
ProfileExtrema suffix_extrema(const PermutationFamily& f, const Coloring& c) {
  ProfileExtrema e;
  for (int i = 0; i < 3; ++i) {
    const auto& perm = f.perms[static_cast<std::size_t>(i)];
    int s = 0, mx = 0, mn = 0;
    for (int y = f.n; y >= 1; --y) {
      s += c.values[static_cast<std::size_t>(perm[static_cast<std::size_t>(y - 1)] - 1)];
      if (s > mx) mx = s;
      if (s < mn) mn = s;
    }
    e.sum_max += mx;   // r_plus
    e.sum_min += mn;   // r_minus
  }
  return e;
}

std::string lemma_detail(const char* which, int got, const char* rel, int bound, int total) {
  std::ostringstream os;
  os << which << "=" << got << " " << rel << " " << bound << " (total=" << total << ")";
  return os.str();
}

// Matching-sign bounds for one coloring, from exact functional values.
std::optional<std::string> check_lemma(int k, int total, int l_plus, int l_minus,
                                       int r_plus, int r_minus) {
  const int delta = total < 0 ? -total : total;
  const int bound = k + delta + 2;
  if (total >= 1) {
    if (l_plus < bound) return lemma_detail("l_plus", l_plus, "<", bound, total);
    if (r_plus < bound) return lemma_detail("r_plus", r_plus, "<", bound, total);
  } else {
    if (l_minus > -bound) return lemma_detail("l_minus", l_minus, ">", -bound, total);
    if (r_minus > -bound) return lemma_detail("r_minus", r_minus, ">", -bound, total);
  }
  return std::nullopt;
}

// Mismatched-sign (complement) bounds for one coloring.
std::optional<std::string> check_corollary(int k, int total, int l_plus, int l_minus,
                                           int r_plus, int r_minus) {
  const int delta = total < 0 ? -total : total;
  const int bound = k - 2 * delta + 2;
  if (total >= 1) {
    if (l_minus > -bound) return lemma_detail("l_minus", l_minus, ">", -bound, total);
    if (r_minus > -bound) return lemma_detail("r_minus", r_minus, ">", -bound, total);
  } else {
    if (l_plus < bound) return lemma_detail("l_plus", l_plus, "<", bound, total);
    if (r_plus < bound) return lemma_detail("r_plus", r_plus, "<", bound, total);
  }
  return std::nullopt;
}

std::optional<std::string> check_identities(int total, int l_plus, int l_minus,
                                            int r_plus, int r_minus) {
  if (r_minus + l_plus != 3 * total) {
    std::ostringstream os;
    os << "r_minus + l_plus = " << r_minus + l_plus << " != 3*total = " << 3 * total;
    return os.str();
  }
  if (r_plus + l_minus != 3 * total) {
    std::ostringstream os;
    os << "r_plus + l_minus = " << r_plus + l_minus << " != 3*total = " << 3 * total;
    return os.str();
  }
  return std::nullopt;
}

// Honest per-coloring check used by sample sweeps: evaluates the functionals
// through disc_quadruple for the coloring and its negation.
template <class Check>
std::optional<std::string> sampled_pair_check(const PermutationFamily& f,
                                              const Coloring& c, int k, Check check) {
  const DiscQuadruple q = disc_quadruple(f, c);
  if (auto v = check(k, c.total, q.l_plus, q.l_minus, q.r_plus, q.r_minus)) return v;
  const Coloring neg = negated(c);
  const DiscQuadruple nq = disc_quadruple(f, neg);
  if (auto v = check(k, neg.total, nq.l_plus, nq.l_minus, nq.r_plus, nq.r_minus)) {
    *v += " [on negated coloring]";
    return v;
  }
  return std::nullopt;
}

VerificationReport base_report(Claim claim, const PermutationFamily& f,
                               const VerifyOptions& opts) {
  VerificationReport report;
  report.claim = claim;
  report.k = f.k;
  report.variant = f.variant;
  report.mode = opts.mode;
  report.workers = std::max(1, opts.workers);
  if (opts.mode == SweepMode::sample) report.seed = opts.seed;
  return report;
}

void finish(VerificationReport& report, SweepPartial stats, Clock::time_point start) {
  report.checked = stats.checked;
  report.violations = stats.violations;
  report.first_violation = std::move(stats.first);
  report.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

constexpr const char* kNegationReduction =
    "negation closure: enumerated chi(1)=+1 half-space, each coloring covering "
    "its negation pair";

}  // namespace

VerificationReport verify_theorem(const PermutationFamily& f, TheoremMethod method,
                                  const VerifyOptions& opts) {
  if (!f.constructed())
    throw std::invalid_argument("verify_theorem needs a constructed family");
  require_odd_ground_set(f);
  const auto start = Clock::now();
  VerificationReport report = base_report(Claim::theorem1, f, opts);
  report.mode = SweepMode::exhaustive;  // both methods are complete searches
  report.seed.reset();
  report.method = method;
  const int bound = theorem_bound(f.k);
  report.bound = bound;

  SolverConfig solver = opts.solver;
  solver.workers = std::max(solver.workers, opts.workers);

  if (method == TheoremMethod::oracle) {
    const SolveOutcome out = exhaustive_min_disc(f, solver);
    report.checked = out.nodes_explored;
    if (!out.complete()) {
      report.inconclusive = true;
    } else {
      report.exact_value = out.value;
      if (out.value < bound) {
        report.violations = 1;
        std::ostringstream os;
        os << "exact minimum discrepancy " << out.value << " < bound " << bound;
        report.first_violation = Violation{*out.witness_coloring, os.str()};
      }
    }
  } else {
    const SolveOutcome out = decide_disc_at_most(f, bound - 1, solver);
    report.checked = out.nodes_explored;
    if (out.feasible == Feasibility::indeterminate) {
      report.inconclusive = true;
    } else if (out.feasible == Feasibility::feasible) {
      report.violations = 1;
      std::ostringstream os;
      os << "coloring with discrepancy <= " << bound - 1 << " exists";
      report.first_violation = Violation{*out.witness_coloring, os.str()};
    }
  }
  report.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport verify_theorem(int k, TheoremMethod method, const VerifyOptions& opts) {
  return verify_theorem(build_family(k), method, opts);
}

VerificationReport verify_lemma2(const PermutationFamily& f, const VerifyOptions& opts) {
  if (!f.constructed())
    throw std::invalid_argument("verify_lemma2 needs a constructed family");
  require_odd_ground_set(f);
  const auto start = Clock::now();
  VerificationReport report = base_report(Claim::lemma2, f, opts);
  const int k = f.k;

  if (opts.mode == SweepMode::exhaustive) {
    require_exhaustible(f);
    report.reduction = kNegationReduction;
    // Fast path: maintained profile, left extrema by scan, right functionals
    // via the per-permutation relation suffix = total - prefix. Agreement
    // with the recompute path is covered by the spot-check suites.
    auto kernel = [&](const Coloring& c, const PrefixProfile& profile)
        -> std::optional<std::string> {
      const ProfileExtrema e = profile_extrema(profile, f.n);
      const int l_plus = e.sum_max, l_minus = e.sum_min;
      const int r_plus = 3 * c.total - e.sum_min, r_minus = 3 * c.total - e.sum_max;
      return check_lemma(k, c.total, l_plus, l_minus, r_plus, r_minus);
    };
    finish(report, exhaustive_sweep(f, report.workers, kernel), start);
  } else {
    auto kernel = [&](const Coloring& c) {
      return sampled_pair_check(f, c, k, check_lemma);
    };
    finish(report, sample_sweep(f, opts.samples, opts.seed, report.workers, kernel),
           start);
  }
  return report;
}

VerificationReport verify_lemma2(int k, const VerifyOptions& opts) {
  return verify_lemma2(build_family(k), opts);
}

VerificationReport verify_corollary(const PermutationFamily& f, const VerifyOptions& opts) {
  if (!f.constructed())
    throw std::invalid_argument("verify_corollary needs a constructed family");
  require_odd_ground_set(f);
  const auto start = Clock::now();
  VerificationReport report = base_report(Claim::corollary3, f, opts);
  const int k = f.k;

  if (opts.mode == SweepMode::exhaustive) {
    require_exhaustible(f);
    report.reduction = kNegationReduction;
    // The right functionals come from an independent suffix accumulation,
    // so the identity checks compare two genuinely different routes.
    auto kernel = [&](const Coloring& c, const PrefixProfile& profile)
        -> std::optional<std::string> {
      const ProfileExtrema left = profile_extrema(profile, f.n);
      const ProfileExtrema right = suffix_extrema(f, c);
      if (auto v = check_identities(c.total, left.sum_max, left.sum_min,
                                    right.sum_max, right.sum_min))
        return v;
      return check_corollary(k, c.total, left.sum_max, left.sum_min, right.sum_max,
                             right.sum_min);
    };
    finish(report, exhaustive_sweep(f, report.workers, kernel), start);
  } else {
    auto kernel = [&](const Coloring& c) -> std::optional<std::string> {
      const DiscQuadruple q = disc_quadruple(f, c);
      if (auto v = check_identities(c.total, q.l_plus, q.l_minus, q.r_plus, q.r_minus))
        return v;
      return sampled_pair_check(f, c, k, check_corollary);
    };
    finish(report, sample_sweep(f, opts.samples, opts.seed, report.workers, kernel),
           start);
  }
  return report;
}

VerificationReport verify_corollary(int k, const VerifyOptions& opts) {
  return verify_corollary(build_family(k), opts);
}

VerificationReport verify_identity(int k, const VerifyOptions& opts) {
  const PermutationFamily f = build_family(k);
  require_odd_ground_set(f);
  const auto start = Clock::now();
  VerificationReport report = base_report(Claim::identity, f, opts);

  if (opts.mode == SweepMode::exhaustive) {
    require_exhaustible(f);
    report.reduction = kNegationReduction;
    auto kernel = [&](const Coloring& c, const PrefixProfile& profile)
        -> std::optional<std::string> {
      const ProfileExtrema left = profile_extrema(profile, f.n);
      const ProfileExtrema right = suffix_extrema(f, c);
      return check_identities(c.total, left.sum_max, left.sum_min, right.sum_max,
                              right.sum_min);
    };
    finish(report, exhaustive_sweep(f, report.workers, kernel), start);
  } else {
    auto kernel = [&](const Coloring& c) -> std::optional<std::string> {
      const DiscQuadruple q = disc_quadruple(f, c);
      return check_identities(c.total, q.l_plus, q.l_minus, q.r_plus, q.r_minus);
    };
    finish(report, sample_sweep(f, opts.samples, opts.seed, report.workers, kernel),
           start);
  }
  return report;
}

VerificationReport verify_variants(int k, const VerifyOptions& opts) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = Claim::variants;
  report.k = k;
  report.workers = std::max(1, opts.workers);
  report.seed = opts.seed;

  const int count = 1 << k;
  for (int idx = 0; idx < count; ++idx) {
    std::string word(static_cast<std::size_t>(k), 'R');
    for (int h = 0; h < k; ++h)
      if ((idx >> (k - 1 - h)) & 1) word[static_cast<std::size_t>(h)] = 'L';
    const PermutationFamily f = build_family(k, word);

    // Small families get the full oracle; n = 27 uses the (still complete)
    // decision search so the 8-variant sweep stays desk-scale.
    const TheoremMethod method =
        f.n <= 9 ? TheoremMethod::oracle : TheoremMethod::decide;
    VerifyOptions theorem_opts = opts;
    report.per_variant.push_back(verify_theorem(f, method, theorem_opts));

    VerifyOptions lemma_opts = opts;
    lemma_opts.mode = f.n <= 9 ? SweepMode::exhaustive : SweepMode::sample;
    report.per_variant.push_back(verify_lemma2(f, lemma_opts));
  }

  for (const auto& sub : report.per_variant) {
    report.checked += sub.checked;
    report.violations += sub.violations;
    report.inconclusive = report.inconclusive || sub.inconclusive;
    if (sub.first_violation && !report.first_violation)
      report.first_violation = sub.first_violation;
  }
  report.mode = SweepMode::exhaustive;
  report.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

std::string claim_name(Claim claim) {
  switch (claim) {
    case Claim::theorem1: return "theorem1";
    case Claim::lemma2: return "lemma2";
    case Claim::corollary3: return "corollary3";
    case Claim::identity: return "identity";
    case Claim::variants: return "variants";
  }
  return "?";
}

std::string summary_line(const VerificationReport& report) {
  std::ostringstream os;
  os << claim_name(report.claim) << " k=" << report.k;
  if (!report.variant.empty()) os << " variant=" << report.variant;
  if (report.method)
    os << " method=" << (*report.method == TheoremMethod::oracle ? "oracle" : "decide");
  else
    os << " mode=" << (report.mode == SweepMode::exhaustive ? "exhaustive" : "sample");
  os << ": ";
  if (report.inconclusive) {
    os << "INCONCLUSIVE";
  } else if (report.violations == 0) {
    os << "PASS";
  } else {
    // On non-canonical families the bounds are conjectural, so a violation
    // is a reportable finding rather than an implementation failure.
    const bool conjecture = report.claim == Claim::variants ||
                            report.variant.find('L') != std::string::npos;
    os << (conjecture ? "FINDING" : "FAIL");
  }
  os << " (checked=" << report.checked << ", violations=" << report.violations;
  if (report.exact_value) os << ", exact=" << *report.exact_value;
  if (report.bound) os << ", bound=" << *report.bound;
  os << ", " << report.wall_time.count() << " ms)";
  return os.str();
}

}  // namespace permdisc
