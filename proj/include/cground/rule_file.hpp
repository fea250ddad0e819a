#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cground/background.hpp"
#include "cground/expression.hpp"

namespace cground {

struct Stakeholder {
  StakeholderId id;
  HornExpression rules;
  friend bool operator==(const Stakeholder&, const Stakeholder&) = default;
};

/// A parsed rule file: shared background plus one rule set per stakeholder,
/// ordered by id (ids run 1..n without gaps).
struct RuleFile {
  Background background;
  std::vector<Stakeholder> stakeholders;

  /// Union of all stakeholder rules, provenance merged.
  [[nodiscard]] HornExpression united() const;
  [[nodiscard]] std::vector<HornExpression> expressions() const;
  /// Every atom mentioned by a rule or by the background.
  [[nodiscard]] std::set<Atom> atoms() const;

  friend bool operator==(const RuleFile&, const RuleFile&) = default;
};

enum class Severity { Warning, Error };

struct Diagnostic {
  std::string code;  // E_SYNTAX, E_NO_EXCLUDENT, E_TRIVIAL_RULE, E_BAD_DISJOINT, E_BAD_AGENT, W_DUPLICATE_RULE,
                    // W_NO_EXCLUDENT, W_SELF_DEFEATING
  Severity severity = Severity::Error;
  int line = 0;
  int col = 0;
  std::string message;
};

/// `file:line:col: error[CODE]: message`
std::string format_diagnostic(const Diagnostic& d, std::string_view filename);

struct ParseOptions {
  /// Promote E_TRIVIAL_RULE from warning to error.
  bool strict = false;
};

struct ParseOutcome {
  std::optional<RuleFile> file;  // empty when any error was reported
  std::vector<Diagnostic> diagnostics;
  [[nodiscard]] bool ok() const noexcept { return file.has_value(); }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Parses the rule DSL:
///
///     # comment
///     disjoint policeCall parentsAlert
///     agent 1 {
///       illegalActivity & !adult -> policeCall
///     }
///
/// `!x` names the atom `not_x` and implies `disjoint x not_x`.
ParseOutcome parse_rules(std::string_view text, const ParseOptions& options = {});

/// Like parse_rules, but throws ParseError when the file is invalid.
RuleFile parse(std::string_view text, const ParseOptions& options = {});

/// Canonical text: sorted disjoint lines, then agent blocks with sorted rules.
/// Atoms `not_x` whose pair {x, not_x} is in the background print as `!x`.
std::string serialize(const RuleFile& rf);

/// Renders a single atom the way serialize() would.
std::string render_atom(Atom a, const Background& b);
std::string render_clause(const DefiniteClause& c, const Background& b);

/// Builds a rule file holding `f` with the given background; each clause is
/// listed under every stakeholder in its provenance. Agents 1..agent_count
/// are always emitted, possibly empty.
RuleFile to_rule_file(const HornExpression& f, const Background& b, std::size_t agent_count);

}  // namespace cground
