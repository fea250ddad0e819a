#pragma once

#include <map>
#include <ranges>
#include <set>
#include <span>
#include <vector>

#include "cground/clause.hpp"

namespace cground {

using StakeholderId = int;

/// A finite set of definite clauses, each tagged with the stakeholders that
/// contributed it. Iteration visits clauses in canonical order.
class HornExpression {
 public:
  using Provenance = std::set<StakeholderId>;

  HornExpression() = default;
  HornExpression(std::initializer_list<DefiniteClause> clauses);

  /// Inserts `c`, merging `provenance` into any existing entry.
  /// Returns true when `c` was not present before.
  bool insert(const DefiniteClause& c, const Provenance& provenance = {});
  bool erase(const DefiniteClause& c);

  [[nodiscard]] bool contains(const DefiniteClause& c) const { return clauses_.contains(c); }
  [[nodiscard]] std::size_t size() const noexcept { return clauses_.size(); }
  [[nodiscard]] bool empty() const noexcept { return clauses_.empty(); }

  /// Stakeholders behind `c`; empty for unknown clauses.
  [[nodiscard]] const Provenance& provenance(const DefiniteClause& c) const;

  [[nodiscard]] auto clauses() const& { return std::views::keys(clauses_); }
  auto clauses() const&& = delete;  // the view would dangle
  [[nodiscard]] std::vector<DefiniteClause> to_vector() const;
  [[nodiscard]] std::set<Atom> atoms() const;

  /// Copy without `c`.
  [[nodiscard]] HornExpression without(const DefiniteClause& c) const;
  /// Copy with `c` added (provenance preserved when already present).
  [[nodiscard]] HornExpression with(const DefiniteClause& c) const;

  /// Set equality on clauses; provenance is ignored.
  [[nodiscard]] bool same_clauses(const HornExpression& other) const;

  /// Equality including provenance.
  friend bool operator==(const HornExpression&, const HornExpression&) = default;

 private:
  std::map<DefiniteClause, Provenance> clauses_;
};

/// Union of several expressions with merged provenance.
HornExpression unite(std::span<const HornExpression> parts);

}  // namespace cground
