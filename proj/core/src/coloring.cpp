#include "permdisc/coloring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permdisc {

Coloring make_coloring(std::vector<std::int8_t> values) {
  Coloring c;
  c.total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 1 && values[i] != -1)
      throw std::invalid_argument("coloring entry at element " +
                                  std::to_string(i + 1) + " is not +/-1");
    c.total += values[i];
  }
  c.values = std::move(values);
  return c;
}

Coloring negated(const Coloring& c) {
  Coloring out = c;
  for (auto& v : out.values) v = static_cast<std::int8_t>(-v);
  out.total = -c.total;
  return out;
}

std::string to_string(const Coloring& c) {
  std::string s;
  s.reserve(c.values.size());
  for (auto v : c.values) s.push_back(v > 0 ? '+' : '-');
  return s;
}

Coloring coloring_from_string(std::string_view text) {
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
  std::vector<std::int8_t> values;
  const bool char_form =
      !stripped.empty() && stripped.find_first_not_of("+-") == std::string::npos;
  if (char_form) {
    values.reserve(stripped.size());
    for (char ch : stripped) values.push_back(ch == '+' ? +1 : -1);
    return make_coloring(std::move(values));
  }
  std::istringstream in{std::string(text)};
  int v = 0;
  while (in >> v) {
    if (v != 1 && v != -1)
      throw std::invalid_argument("coloring entries must be +1 or -1, got " +
                                  std::to_string(v));
    values.push_back(static_cast<std::int8_t>(v));
  }
  if (!in.eof())
    throw std::invalid_argument("coloring string contains a non-integer token");
  if (values.empty()) throw std::invalid_argument("empty coloring");
  return make_coloring(std::move(values));
}

}  // namespace permdisc
