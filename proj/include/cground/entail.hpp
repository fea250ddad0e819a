#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cground/expression.hpp"

namespace cground {

/// Least fixpoint of forward chaining from a seed.
struct Closure {
  std::set<Atom> derived;
  /// Clauses that fired, in firing order.
  std::vector<DefiniteClause> used_clauses;
  /// Number of saturation layers that fired at least one clause.
  std::size_t rounds = 0;
};

/// Counter-based forward chaining over a fixed clause list.
///
/// Saturation proceeds in layers: layer 1 fires every clause whose antecedent
/// lies inside the seed, layer k fires the clauses completed by atoms derived
/// in layer k-1. Each clause fires at most once, so a run costs time linear in
/// the number of antecedent occurrences and takes at most `size()` layers.
///
/// One instance can be re-run with different seeds; a run only touches the
/// atoms it derives.
class ForwardChainer {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit ForwardChainer(std::vector<DefiniteClause> clauses);
  explicit ForwardChainer(const HornExpression& f) : ForwardChainer(f.to_vector()) {}

  /// Saturates from `seed`. Clause `disabled` (an index) never fires.
  void run(std::span<const Atom> seed, std::size_t disabled = npos);

  [[nodiscard]] bool holds(Atom a) const noexcept {
    return a.id() < holds_.size() && holds_[a.id()] != 0;
  }
  [[nodiscard]] bool holds_all(std::span<const Atom> atoms) const noexcept;
  [[nodiscard]] bool fired(std::size_t clause) const noexcept { return fired_round_[clause] != 0; }
  /// Layer in which `clause` fired; 0 when it did not fire.
  [[nodiscard]] std::uint32_t fired_round(std::size_t clause) const noexcept { return fired_round_[clause]; }
  [[nodiscard]] std::size_t rounds() const noexcept { return rounds_; }
  [[nodiscard]] std::vector<Atom> derived() const;

  [[nodiscard]] const std::vector<DefiniteClause>& clauses() const noexcept { return clauses_; }
  [[nodiscard]] std::size_t size() const noexcept { return clauses_.size(); }
  /// Index of `c` in clauses(), if present.
  [[nodiscard]] std::optional<std::size_t> index_of(const DefiniteClause& c) const;
  /// Indices of the clauses whose antecedent contains `a`.
  [[nodiscard]] std::span<const std::uint32_t> occurrences(Atom a) const noexcept;

 private:
  void mark(Atom a, std::vector<std::uint32_t>& ready);

  std::vector<DefiniteClause> clauses_;
  bool sorted_ = false;
  std::vector<std::uint32_t> occ_offset_;  // CSR over atom ids
  std::vector<std::uint32_t> occ_clause_;
  std::vector<std::uint32_t> remaining_;
  std::vector<std::uint32_t> fired_round_;
  std::vector<std::uint8_t> holds_;
  std::vector<Atom> touched_;
  std::size_t rounds_ = 0;
  std::size_t disabled_ = npos;
};

/// Forward-chaining closure of `seed` under `f`.
Closure close(const HornExpression& f, std::span<const Atom> seed);
inline Closure close(const HornExpression& f, const std::set<Atom>& seed) {
  const std::vector<Atom> v(seed.begin(), seed.end());
  return close(f, v);
}

/// f |= c for a definite clause c.
bool entails_clause(const HornExpression& f, const DefiniteClause& c);

/// psi =>_f phi: every antecedent atom of phi is derivable from ant(psi)
/// under f together with psi itself.
bool derives(const HornExpression& f, const DefiniteClause& psi, const DefiniteClause& phi);

}  // namespace cground
