#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cground/rule_file.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) { return std::string(CGROUND_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline cground::RuleFile load(const std::string& name) { return cground::parse(read_fixture(name)); }

inline cground::Atom at(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '!') return cground::Atom("not_" + s.substr(1));
  return cground::Atom(s);
}

/// "p & !u -> s" with `!x` read as not_x.
inline cground::DefiniteClause cl(std::string_view text) {
  const auto arrow = text.find("->");
  std::vector<cground::Atom> body;
  std::string_view lhs = text.substr(0, arrow);
  while (true) {
    const auto amp = lhs.find('&');
    const auto part = lhs.substr(0, amp);
    if (part.find_first_not_of(' ') != std::string_view::npos) body.push_back(at(part));
    if (amp == std::string_view::npos) break;
    lhs.remove_prefix(amp + 1);
  }
  return cground::DefiniteClause(std::move(body), at(text.substr(arrow + 2)));
}

inline cground::HornExpression expr(std::initializer_list<std::string_view> clauses) {
  cground::HornExpression f;
  for (auto c : clauses) f.insert(cl(c));
  return f;
}

/// Background with x / not_x for each listed name.
inline cground::Background complements(std::initializer_list<std::string_view> names) {
  cground::Background b;
  for (auto n : names) b.add_disjoint(cground::Atom(n), cground::Atom("not_" + std::string(n)));
  return b;
}

}  // namespace support
