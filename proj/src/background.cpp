#include "cground/background.hpp"

namespace cground {

ReflexiveDisjointness::ReflexiveDisjointness(Atom a)
    : std::invalid_argument("atom '" + a.name() + "' cannot be disjoint from itself") {}

Background::Background(std::initializer_list<Pair> pairs) {
  for (const auto& [p, q] : pairs) add_disjoint(p, q);
}

bool Background::add_disjoint(Atom p, Atom q) {
  if (p == q) throw ReflexiveDisjointness(p);
  if (q < p) std::swap(p, q);
  if (!pairs_.emplace(p, q).second) return false;
  excludents_[p].insert(q);
  excludents_[q].insert(p);
  return true;
}

bool Background::disjoint(Atom p, Atom q) const {
  if (q < p) std::swap(p, q);
  return pairs_.contains({p, q});
}

const std::set<Atom>& Background::excludents(Atom p) const {
  static const std::set<Atom> none;
  auto it = excludents_.find(p);
  return it == excludents_.end() ? none : it->second;
}

std::set<Atom> Background::atoms() const {
  std::set<Atom> out;
  for (const auto& [p, _] : excludents_) out.insert(p);
  return out;
}

}  // namespace cground
