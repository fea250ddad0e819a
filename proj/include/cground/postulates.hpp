#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "cground/background.hpp"
#include "cground/expression.hpp"

namespace cground {

enum class Postulate { P1, P2, P3, P4, P5, P6 };

std::string to_string(Postulate p);

struct Verdict {
  bool pass = true;
  /// Passed because the postulate's premise does not apply (P2 only).
  bool vacuous = false;
  /// Clauses demonstrating a failure; empty on pass.
  std::vector<DefiniteClause> witness;
  std::string note;
};

/// Scope of q in the first premise of P6.
enum class P6Scope {
  /// every substitution phi^{q\p}, q an excludent of p, is coherent with F
  AllExcludents,
  /// some substitution is coherent with F
  SomeExcludent,
};

struct PostulateOptions {
  P6Scope p6_scope = P6Scope::AllExcludents;
};

/// F is coherent. Witness: an incoherent clause and, for clashes, its partner.
Verdict check_p1(const HornExpression& f, const Background& b);

/// If the union of the inputs is coherent, F is equivalent to it.
/// Witness: a clause entailed by one side but not the other.
Verdict check_p2(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b);

/// For every input clause phi and excludent p of its consequent,
/// F does not entail ant(phi) -> p. Witness: phi, then ant(phi) -> p.
Verdict check_p3(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b);

/// Every clause of F is entailed by a single input clause. Witness: the clause.
Verdict check_p4(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b);

/// Every input clause entails some non-trivial clause of F. Witness: the input clause.
Verdict check_p5(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b);

/// For phi in F and p in ant(phi): when the substitutions phi^{q\p} keep F
/// coherent, no stakeholder entailing one of them entails phi^{-p}.
/// Witness: phi, phi^{-p}, then the substitution the stakeholder entails.
Verdict check_p6(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b,
                 P6Scope scope = P6Scope::AllExcludents);

struct P6Violation {
  DefiniteClause clause;
  Atom atom;               ///< the unwarranted antecedent atom p
  DefiniteClause dropped;  ///< clause without p
  DefiniteClause entailed;  ///< the substitution the stakeholder entails
  std::size_t stakeholder;  ///< 1-based input index
};

/// Every (clause, atom) pair violating P6, in canonical clause order, with
/// the first stakeholder that witnesses it.
std::vector<P6Violation> p6_violations(std::span<const HornExpression> inputs, const HornExpression& f,
                                       const Background& b, P6Scope scope = P6Scope::AllExcludents,
                                       bool first_only = false);

/// {psi} |= phi for definite clauses, by the subset test.
bool single_clause_entails(const DefiniteClause& psi, const DefiniteClause& phi);

struct PostulateReport {
  std::array<Verdict, 6> verdicts;

  [[nodiscard]] const Verdict& operator[](Postulate p) const { return verdicts[static_cast<std::size_t>(p)]; }
  [[nodiscard]] bool all_pass() const;
};

PostulateReport check_all(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b,
                          const PostulateOptions& options = {});

}  // namespace cground
