#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cground/atom.hpp"

namespace cground {

/// A definite Horn clause `a1 & ... & an -> c`.
///
/// The antecedent is kept sorted by atom name without duplicates, so two
/// clauses compare equal exactly when their antecedent sets and consequents
/// agree. The total order is lexicographic on (antecedent, consequent); every
/// deterministic choice in the library is made through it.
class DefiniteClause {
 public:
  DefiniteClause(std::vector<Atom> antecedent, Atom consequent);
  DefiniteClause(std::initializer_list<Atom> antecedent, Atom consequent)
      : DefiniteClause(std::vector<Atom>(antecedent), consequent) {}

  [[nodiscard]] std::span<const Atom> antecedent() const noexcept { return antecedent_; }
  [[nodiscard]] Atom consequent() const noexcept { return consequent_; }

  [[nodiscard]] bool in_antecedent(Atom a) const noexcept;
  /// A clause is trivial when its consequent already occurs in its antecedent.
  [[nodiscard]] bool is_trivial() const noexcept { return in_antecedent(consequent_); }

  /// Canonical text, e.g. `illegalActivity & child -> parentsAlert`.
  /// A clause with an empty antecedent prints as `-> c`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DefiniteClause&, const DefiniteClause&) = default;
  friend std::strong_ordering operator<=>(const DefiniteClause& lhs, const DefiniteClause& rhs);

 private:
  std::vector<Atom> antecedent_;
  Atom consequent_;
};

class AtomNotInAntecedent : public std::invalid_argument {
 public:
  AtomNotInAntecedent(const DefiniteClause& clause, Atom atom);
};

/// Adds `p` to the antecedent (identity when already present).
DefiniteClause weaken(const DefiniteClause& c, Atom p);
/// Removes `p` from the antecedent. Throws AtomNotInAntecedent if absent.
DefiniteClause drop(const DefiniteClause& c, Atom p);
/// Replaces antecedent atom `p` by `q`. Throws AtomNotInAntecedent if `p` is absent.
DefiniteClause substitute(const DefiniteClause& c, Atom p, Atom q);

}  // namespace cground
