#include "cground/clause.hpp"

#include <algorithm>

namespace cground {

DefiniteClause::DefiniteClause(std::vector<Atom> antecedent, Atom consequent)
    : antecedent_(std::move(antecedent)), consequent_(consequent) {
  std::sort(antecedent_.begin(), antecedent_.end());
  antecedent_.erase(std::unique(antecedent_.begin(), antecedent_.end()), antecedent_.end());
}

bool DefiniteClause::in_antecedent(Atom a) const noexcept {
  return std::binary_search(antecedent_.begin(), antecedent_.end(), a);
}

std::string DefiniteClause::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < antecedent_.size(); ++i) {
    if (i > 0) out += " & ";
    out += antecedent_[i].name();
  }
  out += antecedent_.empty() ? "-> " : " -> ";
  out += consequent_.name();
  return out;
}

std::strong_ordering operator<=>(const DefiniteClause& lhs, const DefiniteClause& rhs) {
  if (auto c = std::lexicographical_compare_three_way(lhs.antecedent_.begin(), lhs.antecedent_.end(),
                                                      rhs.antecedent_.begin(), rhs.antecedent_.end());
      c != 0) {
    return c;
  }
  return lhs.consequent_ <=> rhs.consequent_;
}

AtomNotInAntecedent::AtomNotInAntecedent(const DefiniteClause& clause, Atom atom)
    : std::invalid_argument("atom '" + atom.name() + "' is not in the antecedent of '" + clause.to_string() +
                            "'") {}

DefiniteClause weaken(const DefiniteClause& c, Atom p) {
  std::vector<Atom> ant(c.antecedent().begin(), c.antecedent().end());
  ant.push_back(p);
  return {std::move(ant), c.consequent()};
}

DefiniteClause drop(const DefiniteClause& c, Atom p) {
  if (!c.in_antecedent(p)) throw AtomNotInAntecedent(c, p);
  std::vector<Atom> ant;
  ant.reserve(c.antecedent().size());
  for (Atom a : c.antecedent()) {
    if (a != p) ant.push_back(a);
  }
  return {std::move(ant), c.consequent()};
}

DefiniteClause substitute(const DefiniteClause& c, Atom p, Atom q) {
  if (!c.in_antecedent(p)) throw AtomNotInAntecedent(c, p);
  std::vector<Atom> ant(c.antecedent().begin(), c.antecedent().end());
  std::replace(ant.begin(), ant.end(), p, q);
  return {std::move(ant), c.consequent()};
}

}  // namespace cground
