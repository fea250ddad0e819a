#include "cground/expression.hpp"

#include <algorithm>

namespace cground {

HornExpression::HornExpression(std::initializer_list<DefiniteClause> clauses) {
  for (const auto& c : clauses) insert(c);
}

bool HornExpression::insert(const DefiniteClause& c, const Provenance& provenance) {
  auto [it, inserted] = clauses_.try_emplace(c);
  it->second.insert(provenance.begin(), provenance.end());
  return inserted;
}

bool HornExpression::erase(const DefiniteClause& c) { return clauses_.erase(c) > 0; }

const HornExpression::Provenance& HornExpression::provenance(const DefiniteClause& c) const {
  static const Provenance none;
  auto it = clauses_.find(c);
  return it == clauses_.end() ? none : it->second;
}

std::vector<DefiniteClause> HornExpression::to_vector() const {
  std::vector<DefiniteClause> out;
  out.reserve(clauses_.size());
  for (const auto& [c, _] : clauses_) out.push_back(c);
  return out;
}

std::set<Atom> HornExpression::atoms() const {
  std::set<Atom> out;
  for (const auto& [c, _] : clauses_) {
    out.insert(c.antecedent().begin(), c.antecedent().end());
    out.insert(c.consequent());
  }
  return out;
}

HornExpression HornExpression::without(const DefiniteClause& c) const {
  HornExpression copy = *this;
  copy.erase(c);
  return copy;
}

HornExpression HornExpression::with(const DefiniteClause& c) const {
  HornExpression copy = *this;
  copy.insert(c);
  return copy;
}

bool HornExpression::same_clauses(const HornExpression& other) const {
  return std::ranges::equal(clauses(), other.clauses());
}

HornExpression unite(std::span<const HornExpression> parts) {
  HornExpression out;
  for (const auto& part : parts) {
    for (const auto& c : part.clauses()) out.insert(c, part.provenance(c));
  }
  return out;
}

}  // namespace cground
