#include "cground/rule_file.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace cground {

namespace {

constexpr std::string_view kComplementPrefix = "not_";

enum class Tok { Ident, Bang, Amp, Arrow, LBrace, RBrace, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    if (is_ident_char(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), line, col};
    }
    advance();
    switch (c) {
      case '!': return {Tok::Bang, "!", line, col};
      case '&': return {Tok::Amp, "&", line, col};
      case '{': return {Tok::LBrace, "{", line, col};
      case '}': return {Tok::RBrace, "}", line, col};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        break;
      default: break;
    }
    return {Tok::Bad, std::string(1, c), line, col};
  }

 private:
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct SyntaxError {
  Diagnostic diagnostic;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of file";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : lexer_(text), options_(options) { shift(); }

  ParseOutcome run() {
    try {
      while (tok_.kind != Tok::End) statement();
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(e.diagnostic);
      return {std::nullopt, std::move(diagnostics_)};
    }
    validate();
    const bool failed = std::any_of(diagnostics_.begin(), diagnostics_.end(),
                                    [](const Diagnostic& d) { return d.severity == Severity::Error; });
    if (failed) return {std::nullopt, std::move(diagnostics_)};

    RuleFile rf;
    rf.background = std::move(background_);
    for (auto& [id, rules] : agents_) rf.stakeholders.push_back({id, std::move(rules)});
    return {std::move(rf), std::move(diagnostics_)};
  }

 private:
  struct Located {
    Atom atom;
    int line;
    int col;
  };

  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const Token& at, std::string message) {
    throw SyntaxError{{"E_SYNTAX", Severity::Error, at.line, at.col, std::move(message)}};
  }

  void report(std::string code, Severity severity, int line, int col, std::string message) {
    diagnostics_.push_back({std::move(code), severity, line, col, std::move(message)});
  }

  void statement() {
    if (tok_.kind == Tok::Ident && tok_.text == "disjoint") {
      shift();
      const Located p = atom();
      const Located q = atom();
      if (p.atom == q.atom) {
        report("E_BAD_DISJOINT", Severity::Error, p.line, p.col,
               "atom '" + p.atom.name() + "' cannot be disjoint from itself");
      } else {
        background_.add_disjoint(p.atom, q.atom);
      }
      return;
    }
    if (tok_.kind == Tok::Ident && tok_.text == "agent") {
      agent_block();
      return;
    }
    fail(tok_, "expected 'disjoint' or 'agent', found " + describe(tok_));
  }

  void agent_block() {
    const Token keyword = tok_;
    shift();
    if (tok_.kind != Tok::Ident) fail(tok_, "expected agent id, found " + describe(tok_));
    int id = 0;
    const auto& text = tok_.text;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc() || end != text.data() + text.size() || id < 1) {
      fail(tok_, "agent id must be a positive integer, found " + describe(tok_));
    }
    const Token id_tok = tok_;
    shift();
    if (agents_.contains(id)) {
      report("E_BAD_AGENT", Severity::Error, id_tok.line, id_tok.col, "duplicate agent id " + std::to_string(id));
    }
    agent_lines_.try_emplace(id, keyword.line, keyword.col);
    auto& rules = agents_[id];

    if (tok_.kind != Tok::LBrace) fail(tok_, "expected '{', found " + describe(tok_));
    shift();
    while (tok_.kind != Tok::RBrace) {
      if (tok_.kind == Tok::End) fail(tok_, "unterminated agent block, expected '}'");
      rule(id, rules);
    }
    shift();
  }

  void rule(StakeholderId id, HornExpression& rules) {
    const Token start = tok_;
    std::vector<Located> body;
    if (tok_.kind != Tok::Arrow) {
      body.push_back(atom());
      while (tok_.kind == Tok::Amp) {
        shift();
        body.push_back(atom());
      }
    }
    if (tok_.kind != Tok::Arrow) fail(tok_, "expected '&' or '->', found " + describe(tok_));
    shift();
    const Located head = atom();

    std::vector<Atom> ant;
    for (const auto& l : body) {
      ant.push_back(l.atom);
      note_use(l, first_use_);
    }
    note_use(head, first_head_use_);
    DefiniteClause clause(std::move(ant), head.atom);
    if (clause.is_trivial()) {
      report("E_TRIVIAL_RULE", options_.strict ? Severity::Error : Severity::Warning, start.line, start.col,
             "rule '" + clause.to_string() + "' has its consequent in its antecedent");
    }
    written_.push_back({clause, start.line, start.col});
    if (!rules.insert(clause, {id})) {
      report("W_DUPLICATE_RULE", Severity::Warning, start.line, start.col,
             "duplicate rule '" + clause.to_string() + "' in agent " + std::to_string(id) + " ignored");
    }
  }

  Located atom() {
    const Token start = tok_;
    bool complement = false;
    if (tok_.kind == Tok::Bang) {
      complement = true;
      shift();
    }
    if (tok_.kind != Tok::Ident) fail(tok_, "expected atom, found " + describe(tok_));
    if (tok_.text == "disjoint" || tok_.text == "agent") fail(tok_, "expected atom, found keyword " + describe(tok_));
    Atom base(tok_.text);
    shift();
    if (!complement) return {base, start.line, start.col};
    Atom negated(std::string(kComplementPrefix) + base.name());
    background_.add_disjoint(base, negated);
    return {negated, start.line, start.col};
  }

  static void note_use(const Located& l, std::map<Atom, Located>& uses) { uses.try_emplace(l.atom, l); }

  void validate() {
    // Consequents need an excludent to ever clash. A condition without one
    // only limits the repairs available, so it is a warning.
    for (const auto& [atom, where] : first_head_use_) {
      if (background_.excludents(atom).empty()) {
        report("E_NO_EXCLUDENT", Severity::Error, where.line, where.col,
               "atom '" + atom.name() + "' has no excludent; add a 'disjoint' line or use '!" + atom.name() + "'");
      }
    }
    for (const auto& [atom, where] : first_use_) {
      if (background_.excludents(atom).empty() && !first_head_use_.contains(atom)) {
        report("W_NO_EXCLUDENT", Severity::Warning, where.line, where.col,
               "condition '" + atom.name() + "' has no excludent, so rules cannot be weakened by its negation");
      }
    }
    for (const auto& [clause, line, col] : written_) {
      for (Atom a : clause.antecedent()) {
        if (!background_.disjoint(a, clause.consequent())) continue;
        report("W_SELF_DEFEATING", Severity::Warning, line, col,
               "rule '" + render_clause(clause, background_) + "' concludes an excludent of its own condition '" +
                   render_atom(a, background_) + "'; no common ground can keep it (P3)");
        break;
      }
    }
    StakeholderId expected = 1;
    for (const auto& [id, _] : agents_) {
      if (id != expected) {
        const auto [line, col] = agent_lines_.at(id);
        report("E_BAD_AGENT", Severity::Error, line, col,
               "agent ids must run 1..n without gaps; missing agent " + std::to_string(expected));
        break;
      }
      ++expected;
    }
  }

  Lexer lexer_;
  ParseOptions options_;
  Token tok_{Tok::End, "", 0, 0};
  Background background_;
  std::map<StakeholderId, HornExpression> agents_;
  std::map<StakeholderId, std::pair<int, int>> agent_lines_;
  std::map<Atom, Located> first_use_;  // antecedents
  std::map<Atom, Located> first_head_use_;
  struct Written {
    DefiniteClause clause;
    int line;
    int col;
  };
  std::vector<Written> written_;
  std::vector<Diagnostic> diagnostics_;
};

std::string joined(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (d.severity != Severity::Error) continue;
    if (!out.empty()) out += "; ";
    out += std::to_string(d.line) + ":" + std::to_string(d.col) + ": " + d.message;
  }
  return out.empty() ? "parse failed" : out;
}

}  // namespace

HornExpression RuleFile::united() const {
  HornExpression out;
  for (const auto& s : stakeholders) {
    for (const auto& c : s.rules.clauses()) out.insert(c, s.rules.provenance(c));
  }
  return out;
}

std::vector<HornExpression> RuleFile::expressions() const {
  std::vector<HornExpression> out;
  out.reserve(stakeholders.size());
  for (const auto& s : stakeholders) out.push_back(s.rules);
  return out;
}

std::set<Atom> RuleFile::atoms() const {
  std::set<Atom> out = background.atoms();
  for (const auto& s : stakeholders) {
    const auto a = s.rules.atoms();
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& d, std::string_view filename) {
  std::ostringstream out;
  out << filename << ':' << d.line << ':' << d.col << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code << "]: " << d.message;
  return out.str();
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(joined(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ParseOutcome parse_rules(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

RuleFile parse(std::string_view text, const ParseOptions& options) {
  auto outcome = parse_rules(text, options);
  if (!outcome.ok()) throw ParseError(std::move(outcome.diagnostics));
  return std::move(*outcome.file);
}

std::string render_atom(Atom a, const Background& b) {
  const auto& name = a.name();
  if (name.size() > kComplementPrefix.size() && name.starts_with(kComplementPrefix)) {
    const std::string_view base = std::string_view(name).substr(kComplementPrefix.size());
    if (Atom::is_valid_name(base) && b.disjoint(Atom(base), a)) return "!" + std::string(base);
  }
  return name;
}

std::string render_clause(const DefiniteClause& c, const Background& b) {
  std::string out;
  bool first = true;
  for (Atom a : c.antecedent()) {
    if (!first) out += " & ";
    out += render_atom(a, b);
    first = false;
  }
  out += first ? "-> " : " -> ";
  out += render_atom(c.consequent(), b);
  return out;
}

std::string serialize(const RuleFile& rf) {
  std::ostringstream out;
  for (const auto& [p, q] : rf.background.pairs()) {
    std::string first = render_atom(p, rf.background), second = render_atom(q, rf.background);
    if (first.starts_with('!') && !second.starts_with('!')) std::swap(first, second);
    out << "disjoint " << first << ' ' << second << '\n';
  }
  for (const auto& s : rf.stakeholders) {
    if (out.tellp() > 0) out << '\n';
    out << "agent " << s.id << " {\n";
    for (const auto& c : s.rules.clauses()) out << "  " << render_clause(c, rf.background) << '\n';
    out << "}\n";
  }
  return out.str();
}

RuleFile to_rule_file(const HornExpression& f, const Background& b, std::size_t agent_count) {
  RuleFile rf;
  rf.background = b;
  for (std::size_t i = 1; i <= agent_count; ++i) rf.stakeholders.push_back({static_cast<StakeholderId>(i), {}});
  for (const auto& c : f.clauses()) {
    for (StakeholderId id : f.provenance(c)) {
      if (id >= 1 && static_cast<std::size_t>(id) <= agent_count) rf.stakeholders[id - 1].rules.insert(c, {id});
    }
  }
  return rf;
}

}  // namespace cground
