#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "permdisc/coloring.hpp"
#include "permdisc/family.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/solver.hpp"
#include "permdisc/verify.hpp"
#include "permdisc/witness.hpp"

namespace permdisc {

inline constexpr int kSchemaVersion = 1;

/// Malformed input file. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, int line, int column, const std::string& message);

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string path_;
  int line_ = 0;
  int column_ = 0;
};

// --- permutation families ---------------------------------------------
// Text form: 3 lines, each the one-line notation as space-separated
// 1-based integers, first line = permutation 1. JSON form: object with
// k, variant, perms (and n, schema_version on output).

PermutationFamily read_family_text(std::istream& in, const std::string& path);
PermutationFamily read_family_json(const std::string& text, const std::string& path);
/// Sniffs JSON ('{' first) vs text.
PermutationFamily read_family_file(const std::string& path);

std::string family_to_text(const PermutationFamily& f);
std::string family_to_json(const PermutationFamily& f);

// --- colorings ----------------------------------------------------------
// One line over {+,-} or space-separated +/-1 integers, element order 1..n.

Coloring read_coloring_text(std::istream& in, const std::string& path);
Coloring read_coloring_file(const std::string& path);

// --- report serialization ------------------------------------------------

std::string metrics_to_json(const PermutationFamily& f, const Coloring& c);
std::string witness_to_json(const WitnessTriple& w);
std::string bad_prefix_to_json(const BadPrefix& b);
std::string solve_to_json(const SolveOutcome& out);
std::string report_to_json(const VerificationReport& report);

/// Sweep table: header row plus one record per (k, variant) sub-result.
std::string report_to_csv(const VerificationReport& report);

}  // namespace permdisc
