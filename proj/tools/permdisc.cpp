// Command line front end over the permdisc core library.
//
// Exit codes: 0 success / claim passes, 1 claim violation, 2 usage or input
// error, 3 inconclusive (a search ran out of budget).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "permdisc/io.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/solver.hpp"
#include "permdisc/verify.hpp"
#include "permdisc/witness.hpp"

namespace {

using namespace permdisc;

constexpr std::uint64_t kDefaultSeed = 1729;  // fixed default, never wall clock

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CommonOptions {
  int k = -1;
  std::string variant;
  std::string family_path;
  std::string coloring_arg;
  std::string format;
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::uint64_t node_budget = 0;
  std::uint64_t time_budget_ms = 0;
};

void emit(const CommonOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to " + opts.out_path);
  out << payload;
}

PermutationFamily resolve_family(const CommonOptions& opts) {
  if (!opts.family_path.empty() && opts.k >= 0)
    throw std::invalid_argument("--family and --k are mutually exclusive");
  if (!opts.family_path.empty()) return read_family_file(opts.family_path);
  if (opts.k < 0)
    throw std::invalid_argument("either --family or --k is required");
  const std::string variant = opts.variant.empty() ? all_right(opts.k) : opts.variant;
  return build_family(opts.k, variant);
}

Coloring resolve_coloring(const CommonOptions& opts) {
  if (opts.coloring_arg.empty()) throw std::invalid_argument("--coloring is required");
  if (std::filesystem::exists(opts.coloring_arg))
    return read_coloring_file(opts.coloring_arg);
  return coloring_from_string(opts.coloring_arg);
}

SolverConfig solver_config(const CommonOptions& opts) {
  SolverConfig config;
  config.node_budget = opts.node_budget;
  config.time_budget = std::chrono::milliseconds(opts.time_budget_ms);
  config.workers = opts.workers;
  return config;
}

void add_family_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--k", opts.k, "Recursion depth of the built-in construction");
  cmd->add_option("--variant", opts.variant,
                  "Direction word over {R,L}, outermost level first (default all R)");
  cmd->add_option("--family", opts.family_path,
                  "Permutation family file (text or JSON)");
}

// The format default depends on the subcommand (gen is text, the rest are
// json), so it is resolved at dispatch time rather than by CLI11.
void add_output_flags(CLI::App* cmd, CommonOptions& opts, const std::string& def) {
  cmd->add_option("--format", opts.format, "Output format (default " + def + ")");
  cmd->add_option("--out", opts.out_path, "Write the report to a file");
}

std::string format_or(const CommonOptions& opts, const char* def) {
  return opts.format.empty() ? def : opts.format;
}

int run_gen(const CommonOptions& opts) {
  const PermutationFamily f = resolve_family(opts);
  const std::string format = format_or(opts, "text");
  if (format == "json")
    emit(opts, family_to_json(f));
  else if (format == "text")
    emit(opts, family_to_text(f));
  else
    throw std::invalid_argument("gen supports --format text|json");
  return kExitPass;
}

int run_metrics(const CommonOptions& opts) {
  const PermutationFamily f = resolve_family(opts);
  const Coloring c = resolve_coloring(opts);
  if (format_or(opts, "json") != "json")
    throw std::invalid_argument("metrics supports --format json");
  emit(opts, metrics_to_json(f, c));
  return kExitPass;
}

int run_solve(const CommonOptions& opts, const std::string& mode, int t,
              const std::string& method) {
  const PermutationFamily f = resolve_family(opts);
  if (format_or(opts, "json") != "json")
    throw std::invalid_argument("solve supports --format json");

  if (mode == "heuristic") {
    HeuristicStrategy strategy;
    if (method == "random")
      strategy = HeuristicStrategy::random;
    else if (method == "greedy-balance" || method.empty())
      strategy = HeuristicStrategy::greedy_balance;
    else
      throw std::invalid_argument("heuristic --method must be random|greedy-balance");
    const Coloring c = heuristic_coloring(f, strategy, opts.seed);
    const PrefixDisc pd = prefix_system_discrepancy(f, c);
    std::ostringstream os;
    os << "{\n  \"schema_version\": " << kSchemaVersion
       << ",\n  \"mode\": \"heuristic\",\n  \"strategy\": \""
       << (strategy == HeuristicStrategy::random ? "random" : "greedy-balance")
       << "\",\n  \"seed\": " << opts.seed << ",\n  \"value\": " << pd.value
       << ",\n  \"witness\": \"" << to_string(c) << "\"\n}\n";
    emit(opts, os.str());
    return kExitPass;
  }

  SolveOutcome out;
  if (mode == "exact") {
    out = exhaustive_min_disc(f, solver_config(opts));
  } else if (mode == "decide") {
    if (t < 1) throw std::invalid_argument("decide mode requires --t >= 1");
    out = decide_disc_at_most(f, t, solver_config(opts));
  } else {
    throw std::invalid_argument("--mode must be exact|decide|heuristic");
  }
  emit(opts, solve_to_json(out));
  return out.complete() ? kExitPass : kExitInconclusive;
}

int run_witness(const CommonOptions& opts, const std::string& side_arg,
                const std::string& sign_arg, bool extract) {
  const PermutationFamily f = resolve_family(opts);
  const Coloring c = resolve_coloring(opts);
  if (format_or(opts, "json") != "json")
    throw std::invalid_argument("witness supports --format json");

  if (extract) {
    emit(opts, bad_prefix_to_json(extract_bad_prefix(f, c)));
    return kExitPass;
  }
  Side side = Side::L;
  if (side_arg == "R")
    side = Side::R;
  else if (side_arg != "L" && !side_arg.empty())
    throw std::invalid_argument("--side must be L or R");
  Sign sign = c.total >= 1 ? Sign::plus : Sign::minus;  // default: matching sign
  if (sign_arg == "+")
    sign = Sign::plus;
  else if (sign_arg == "-")
    sign = Sign::minus;
  else if (!sign_arg.empty())
    throw std::invalid_argument("--sign must be + or -");

  const WitnessTriple w = build_witness(f, c, side, sign);
  emit(opts, witness_to_json(w));
  const bool ok = sign == Sign::plus ? w.achieved >= w.guarantee
                                     : w.achieved <= w.guarantee;
  return ok ? kExitPass : kExitViolation;
}

int finish_verify(const CommonOptions& opts, const VerificationReport& report) {
  std::cerr << summary_line(report) << "\n";
  if (report.claim == Claim::variants)
    for (const auto& sub : report.per_variant) std::cerr << "  " << summary_line(sub) << "\n";
  const std::string format = format_or(opts, "json");
  if (format == "json")
    emit(opts, report_to_json(report));
  else if (format == "csv")
    emit(opts, report_to_csv(report));
  else if (format != "text")
    throw std::invalid_argument("verify supports --format json|csv|text");
  if (report.inconclusive) return kExitInconclusive;
  return report.violations == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-permutation discrepancy toolkit"};
  app.require_subcommand(1);
  CommonOptions opts;

  auto* gen = app.add_subcommand("gen", "Generate a permutation family");
  add_family_flags(gen, opts);
  add_output_flags(gen, opts, "text");

  auto* metrics = app.add_subcommand("metrics", "Discrepancy functionals of a coloring");
  add_family_flags(metrics, opts);
  metrics->add_option("--coloring", opts.coloring_arg, "Coloring file or inline string");
  add_output_flags(metrics, opts, "json");

  auto* solve = app.add_subcommand("solve", "Exact and heuristic solvers");
  add_family_flags(solve, opts);
  std::string solve_mode = "exact";
  int threshold = 0;
  std::string method;
  solve->add_option("--mode", solve_mode, "exact|decide|heuristic")->default_val("exact");
  solve->add_option("--t", threshold, "Decision threshold (decide mode)");
  solve->add_option("--method", method, "Heuristic strategy: random|greedy-balance");
  solve->add_option("--seed", opts.seed)->default_val(kDefaultSeed);
  solve->add_option("--workers", opts.workers)->default_val(1);
  solve->add_option("--node-budget", opts.node_budget, "0 = unlimited")->default_val(0);
  solve->add_option("--time-budget-ms", opts.time_budget_ms, "0 = unlimited")
      ->default_val(0);
  add_output_flags(solve, opts, "json");

  auto* witness = app.add_subcommand("witness", "Constructive bound witnesses");
  add_family_flags(witness, opts);
  witness->add_option("--coloring", opts.coloring_arg, "Coloring file or inline string");
  std::string side_arg, sign_arg;
  bool extract = false;
  witness->add_option("--side", side_arg, "L|R (default L)");
  witness->add_option("--sign", sign_arg, "+|- (default: sign of the coloring total)");
  witness->add_flag("--extract", extract,
                    "Report the single worst prefix instead of the full triple");
  add_output_flags(witness, opts, "json");

  auto* verify = app.add_subcommand("verify", "Batch verification sweeps");
  verify->require_subcommand(1);
  std::string theorem_method = "oracle";
  std::string sweep_mode = "exhaustive";
  std::uint64_t samples = 100000;
  auto add_verify_flags = [&](CLI::App* cmd, bool with_method) {
    cmd->add_option("--k", opts.k, "Recursion depth")->required();
    if (with_method)
      cmd->add_option("--method", theorem_method, "oracle|decide")->default_val("oracle");
    cmd->add_option("--mode", sweep_mode, "exhaustive|sample")->default_val("exhaustive");
    cmd->add_option("--samples", samples)->default_val(100000);
    cmd->add_option("--seed", opts.seed)->default_val(kDefaultSeed);
    cmd->add_option("--workers", opts.workers)->default_val(1);
    cmd->add_option("--node-budget", opts.node_budget, "0 = unlimited")->default_val(0);
    cmd->add_option("--time-budget-ms", opts.time_budget_ms, "0 = unlimited")
        ->default_val(0);
    add_output_flags(cmd, opts, "json");
  };
  auto* v_theorem = verify->add_subcommand("theorem", "Lower bound by complete search");
  add_verify_flags(v_theorem, true);
  auto* v_lemma = verify->add_subcommand("lemma2", "Matching-sign bound sweep");
  add_verify_flags(v_lemma, false);
  auto* v_corollary = verify->add_subcommand("corollary", "Mismatched-sign bound sweep");
  add_verify_flags(v_corollary, false);
  auto* v_identity = verify->add_subcommand("identity", "Complement identity sweep");
  add_verify_flags(v_identity, false);
  auto* v_variants = verify->add_subcommand("variants", "All 2^k shift-variant families");
  add_verify_flags(v_variants, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(opts);
    if (metrics->parsed()) return run_metrics(opts);
    if (solve->parsed()) return run_solve(opts, solve_mode, threshold, method);
    if (witness->parsed()) return run_witness(opts, side_arg, sign_arg, extract);

    VerifyOptions vopts;
    vopts.mode = sweep_mode == "sample" ? SweepMode::sample : SweepMode::exhaustive;
    if (sweep_mode != "sample" && sweep_mode != "exhaustive")
      throw std::invalid_argument("--mode must be exhaustive|sample");
    vopts.samples = samples;
    vopts.seed = opts.seed;
    vopts.workers = opts.workers;
    vopts.solver = solver_config(opts);

    if (v_theorem->parsed()) {
      TheoremMethod tm;
      if (theorem_method == "oracle")
        tm = TheoremMethod::oracle;
      else if (theorem_method == "decide")
        tm = TheoremMethod::decide;
      else
        throw std::invalid_argument("--method must be oracle|decide");
      return finish_verify(opts, verify_theorem(opts.k, tm, vopts));
    }
    if (v_lemma->parsed()) return finish_verify(opts, verify_lemma2(opts.k, vopts));
    if (v_corollary->parsed())
      return finish_verify(opts, verify_corollary(opts.k, vopts));
    if (v_identity->parsed()) return finish_verify(opts, verify_identity(opts.k, vopts));
    if (v_variants->parsed())
      return finish_verify(opts, verify_variants(opts.k, vopts));
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "permdisc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "permdisc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "permdisc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "permdisc: " << e.what() << "\n";
    return kExitUsage;
  }
}
