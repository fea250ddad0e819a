#include "bitlogic.hpp"

namespace cground::bits {

std::optional<Encoder> Encoder::make(const std::set<Atom>& atoms, const Background& b) {
  std::set<Atom> all = atoms;
  for (Atom a : b.atoms()) all.insert(a);
  if (all.size() > 64) return std::nullopt;
  Encoder enc;
  for (Atom a : all) enc.index_.emplace(a, static_cast<unsigned>(enc.index_.size()));
  enc.excl_.assign(all.size(), 0);
  for (const auto& [p, q] : b.pairs()) {
    enc.excl_[enc.index_.at(p)] |= bit(enc.index_.at(q));
    enc.excl_[enc.index_.at(q)] |= bit(enc.index_.at(p));
  }
  return enc;
}

Clause Encoder::encode(const DefiniteClause& c) const {
  Clause out;
  for (Atom a : c.antecedent()) out.ant |= bit(index_.at(a));
  out.cons = static_cast<std::uint8_t>(index_.at(c.consequent()));
  return out;
}

}  // namespace cground::bits
