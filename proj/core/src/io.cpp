#include "permdisc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace permdisc {

namespace {

using nlohmann::json;

std::string format_message(const std::string& path, int line, int column,
                           const std::string& message) {
  std::ostringstream os;
  os << (path.empty() ? "<input>" : path);
  if (line > 0) {
    os << ":" << line;
    if (column > 0) os << ":" << column;
  }
  os << ": " << message;
  return os.str();
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& token, const std::string& path, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token.text, &used);
    if (used != token.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(path, line, token.column,
                     "expected an integer, got '" + token.text + "'");
  }
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json coloring_json(const Coloring& c) { return to_string(c); }

json violation_json(const std::optional<Violation>& v) {
  if (!v) return nullptr;
  return json{{"coloring", coloring_json(v->coloring)}, {"details", v->details}};
}

json report_json_object(const VerificationReport& r) {
  json j{{"schema_version", kSchemaVersion},
         {"claim", claim_name(r.claim)},
         {"k", r.k},
         {"variant", r.variant},
         {"mode", r.mode == SweepMode::exhaustive ? "exhaustive" : "sample"},
         {"checked", r.checked},
         {"violations", r.violations},
         {"first_violation", violation_json(r.first_violation)},
         {"pass", r.pass()},
         {"inconclusive", r.inconclusive},
         {"workers", r.workers},
         {"millis", r.wall_time.count()}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["reduction"] = r.reduction.empty() ? json(nullptr) : json(r.reduction);
  if (r.method)
    j["method"] = *r.method == TheoremMethod::oracle ? "oracle" : "decide";
  if (r.bound) j["bound"] = *r.bound;
  if (r.exact_value) j["value"] = *r.exact_value;
  if (!r.per_variant.empty()) {
    json subs = json::array();
    for (const auto& sub : r.per_variant) subs.push_back(report_json_object(sub));
    j["variants"] = subs;
  }
  return j;
}

}  // namespace

ParseError::ParseError(std::string path, int line, int column, const std::string& message)
    : std::runtime_error(format_message(path, line, column, message)),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

PermutationFamily read_family_text(std::istream& in, const std::string& path) {
  std::array<std::vector<int>, 3> rows;
  std::string line;
  int line_no = 0;
  int row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (row == 3)
      throw ParseError(path, line_no, tokens[0].column,
                       "expected exactly 3 permutation lines");
    for (const auto& token : tokens)
      rows[static_cast<std::size_t>(row)].push_back(parse_int(token, path, line_no));
    ++row;
  }
  if (row != 3)
    throw ParseError(path, line_no, 0,
                     "expected 3 permutation lines, got " + std::to_string(row));
  try {
    return family_from_perms(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, 0, 0, e.what());
  }
}

PermutationFamily read_family_json(const std::string& text, const std::string& path) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path, 0, 0, e.what());
  }
  try {
    std::array<std::vector<int>, 3> rows;
    const auto& perms = j.at("perms");
    if (!perms.is_array() || perms.size() != 3)
      throw ParseError(path, 0, 0, "'perms' must be an array of 3 rows");
    for (int i = 0; i < 3; ++i)
      rows[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(i)]
                                              .get<std::vector<int>>();
    PermutationFamily f = family_from_perms(std::move(rows));
    if (j.contains("k") && !j["k"].is_null()) {
      const int declared_k = j["k"].get<int>();
      const std::string declared_variant =
          j.contains("variant") && !j["variant"].is_null()
              ? j["variant"].get<std::string>()
              : all_right(declared_k);
      if (declared_k != f.k || declared_variant != f.variant)
        throw ParseError(path, 0, 0,
                         "declared k/variant do not match the permutations");
    }
    return f;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path, 0, 0, e.what());
  }
}

PermutationFamily read_family_file(const std::string& path) {
  const std::string text = read_all(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return read_family_json(text, path);
  std::istringstream in(text);
  return read_family_text(in, path);
}

std::string family_to_text(const PermutationFamily& f) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    for (int p = 1; p <= f.n; ++p) {
      if (p > 1) os << ' ';
      os << f.perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - 1)];
    }
    os << '\n';
  }
  return os.str();
}

std::string family_to_json(const PermutationFamily& f) {
  json j{{"schema_version", kSchemaVersion},
         {"k", f.constructed() ? json(f.k) : json(nullptr)},
         {"variant", f.constructed() ? json(f.variant) : json(nullptr)},
         {"n", f.n},
         {"perms", f.perms}};
  return j.dump(2) + "\n";
}

Coloring read_coloring_text(std::istream& in, const std::string& path) {
  std::string line;
  int line_no = 0;
  std::string content;
  int content_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!content.empty())
      throw ParseError(path, line_no, 1, "expected a single coloring line");
    content = line;
    content_line = line_no;
  }
  if (content.empty()) throw ParseError(path, line_no, 0, "empty coloring file");

  const auto tokens = tokenize(content);
  std::vector<std::int8_t> values;
  std::string stripped;
  for (const auto& token : tokens) stripped += token.text;
  const bool char_form =
      !stripped.empty() && stripped.find_first_not_of("+-") == std::string::npos;
  if (char_form) {
    for (char ch : stripped) values.push_back(ch == '+' ? +1 : -1);
  } else {
    for (const auto& token : tokens) {
      const int v = parse_int(token, path, content_line);
      if (v != 1 && v != -1)
        throw ParseError(path, content_line, token.column,
                         "coloring entries must be +1 or -1, got " + token.text);
      values.push_back(static_cast<std::int8_t>(v));
    }
  }
  return make_coloring(std::move(values));
}

Coloring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return read_coloring_text(in, path);
}

std::string metrics_to_json(const PermutationFamily& f, const Coloring& c) {
  const DiscQuadruple q = disc_quadruple(f, c);
  const PrefixDisc pd = prefix_system_discrepancy(f, c);
  json j{{"schema_version", kSchemaVersion},
         {"n", f.n},
         {"total", c.total},
         {"l_plus", q.l_plus},
         {"l_minus", q.l_minus},
         {"r_plus", q.r_plus},
         {"r_minus", q.r_minus},
         {"cuts",
          {{"l_plus", q.l_plus_cuts},
           {"l_minus", q.l_minus_cuts},
           {"r_plus", q.r_plus_cuts},
           {"r_minus", q.r_minus_cuts}}},
         {"prefix_disc", {{"value", pd.value}, {"perm", pd.perm}, {"x", pd.x}}},
         {"interval_disc", interval_system_discrepancy(f, c)}};
  return j.dump(2) + "\n";
}

std::string witness_to_json(const WitnessTriple& w) {
  json j{{"schema_version", kSchemaVersion},
         {"side", w.side == Side::L ? "L" : "R"},
         {"sign", w.sign == Sign::plus ? "+" : "-"},
         {"cuts", w.cuts},
         {"achieved", w.achieved},
         {"guarantee", w.guarantee},
         {"per_perm_values", w.per_perm_values}};
  return j.dump(2) + "\n";
}

std::string bad_prefix_to_json(const BadPrefix& b) {
  json j{{"schema_version", kSchemaVersion},
         {"perm", b.perm},
         {"x", b.x},
         {"value", b.value}};
  return j.dump(2) + "\n";
}

std::string solve_to_json(const SolveOutcome& out) {
  json j{{"schema_version", kSchemaVersion},
         {"mode", out.mode == SolveMode::exact ? "exact" : "decide"},
         {"nodes", out.nodes_explored},
         {"millis", out.wall_time.count()}};
  if (out.mode == SolveMode::exact) {
    j["value"] = out.value;
    j["complete"] = out.complete();
  } else {
    j["t"] = out.value;
    j["feasible"] = out.feasible == Feasibility::indeterminate
                        ? json(nullptr)
                        : json(out.feasible == Feasibility::feasible);
  }
  j["indeterminate"] = out.feasible == Feasibility::indeterminate;
  j["witness"] =
      out.witness_coloring ? json(to_string(*out.witness_coloring)) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  return report_json_object(report).dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "claim,k,variant,mode,method,bound,value,outcome,checked,violations,millis\n";
  auto row = [&os](const VerificationReport& r) {
    os << claim_name(r.claim) << ',' << r.k << ',' << r.variant << ','
       << (r.mode == SweepMode::exhaustive ? "exhaustive" : "sample") << ',';
    if (r.method) os << (*r.method == TheoremMethod::oracle ? "oracle" : "decide");
    os << ',';
    if (r.bound) os << *r.bound;
    os << ',';
    if (r.exact_value) os << *r.exact_value;
    os << ',';
    os << (r.inconclusive ? "inconclusive" : (r.violations == 0 ? "pass" : "violation"));
    os << ',' << r.checked << ',' << r.violations << ',' << r.wall_time.count() << '\n';
  };
  if (report.per_variant.empty())
    row(report);
  else
    for (const auto& sub : report.per_variant) row(sub);
  return os.str();
}

}  // namespace permdisc
