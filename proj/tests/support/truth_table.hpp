#pragma once

// Semantic reference: entailment by enumerating every interpretation.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "cground/clause.hpp"

namespace support {

using cground::Atom;
using cground::DefiniteClause;

inline bool satisfies(const DefiniteClause& c, const std::map<Atom, unsigned>& index, std::uint32_t world) {
  for (Atom a : c.antecedent()) {
    if (!(world >> index.at(a) & 1u)) return true;
  }
  return (world >> index.at(c.consequent()) & 1u) != 0;
}

/// f |= c, deciding over all 2^|atoms| interpretations of the atoms of f and c.
inline bool tt_entails(std::span<const DefiniteClause> f, const DefiniteClause& c) {
  std::map<Atom, unsigned> index;
  const auto add = [&](Atom a) { index.try_emplace(a, static_cast<unsigned>(index.size())); };
  for (const auto& d : f) {
    for (Atom a : d.antecedent()) add(a);
    add(d.consequent());
  }
  for (Atom a : c.antecedent()) add(a);
  add(c.consequent());
  if (index.size() > 20) throw std::invalid_argument("too many atoms for a truth table");
  const std::uint32_t worlds = 1u << index.size();
  for (std::uint32_t w = 0; w < worlds; ++w) {
    bool model = true;
    for (const auto& d : f) {
      if (!satisfies(d, index, w)) {
        model = false;
        break;
      }
    }
    if (model && !satisfies(c, index, w)) return false;
  }
  return true;
}

}  // namespace support
