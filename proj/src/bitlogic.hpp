#pragma once

// Bitmask rendition of the coherence and postulate checks for small atom
// universes (at most 64 atoms). Used by the oracle to screen candidates.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cground/background.hpp"
#include "cground/clause.hpp"
#include "cground/postulates.hpp"

namespace cground::bits {

using Mask = std::uint64_t;

inline Mask bit(unsigned i) { return Mask{1} << i; }

struct Clause {
  Mask ant = 0;
  std::uint8_t cons = 0;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

class Encoder {
 public:
  /// Empty when more than 64 atoms are involved.
  static std::optional<Encoder> make(const std::set<Atom>& atoms, const Background& b);

  [[nodiscard]] Clause encode(const DefiniteClause& c) const;
  [[nodiscard]] Mask excludents(unsigned atom) const { return excl_[atom]; }

 private:
  std::map<Atom, unsigned> index_;
  std::vector<Mask> excl_;
};

inline bool trivial(const Clause& c) { return (c.ant & bit(c.cons)) != 0; }

/// Closure of `seed` under `cs`, clause `skip` disabled.
inline Mask closure(std::span<const Clause> cs, Mask seed, std::size_t skip = SIZE_MAX) {
  Mask m = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i == skip || (m & bit(cs[i].cons)) || (cs[i].ant & ~m)) continue;
      m |= bit(cs[i].cons);
      changed = true;
    }
  }
  return m;
}

inline bool entails(std::span<const Clause> cs, const Clause& c) {
  return trivial(c) || (closure(cs, c.ant) & bit(c.cons)) != 0;
}

/// `cs` holds distinct clauses.
inline bool coherent(std::span<const Clause> cs, const Encoder& enc) {
  const std::size_t n = cs.size();
  Mask closures[64];
  std::vector<Mask> heap;
  Mask* cl = closures;
  if (n > 64) {
    heap.resize(n);
    cl = heap.data();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (closure(cs, cs[i].ant, i) & bit(cs[i].cons)) return false;
    cl[i] = closure(cs, cs[i].ant);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Mask excl = enc.excludents(cs[i].cons);
    if (!excl) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(excl & bit(cs[j].cons))) continue;
      if ((cs[j].ant & ~cl[i]) == 0) return false;
    }
  }
  return true;
}

/// No input clause has an excludent of its consequent derivable from its antecedent.
inline bool clash_free(std::span<const Clause> cs, std::span<const Clause> inputs, const Encoder& enc) {
  for (const auto& phi : inputs) {
    if (closure(cs, phi.ant) & enc.excludents(phi.cons)) return false;
  }
  return true;
}

}  // namespace cground::bits
