#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "cground/atom.hpp"

namespace cground {

/// Atom -> set of its excludents. Symmetric and irreflexive when built from a
/// Background.
using ExcludentMap = std::map<Atom, std::set<Atom>>;

class ReflexiveDisjointness : public std::invalid_argument {
 public:
  explicit ReflexiveDisjointness(Atom a);
};

/// Shared background knowledge: binary disjointness constraints
/// `(p & q) -> false`. Pairs are unordered and never reflexive.
class Background {
 public:
  using Pair = std::pair<Atom, Atom>;  // first < second

  Background() = default;
  Background(std::initializer_list<Pair> pairs);

  /// Records that `p` and `q` cannot both hold. Throws ReflexiveDisjointness if p == q.
  /// Returns false when the pair was already known.
  bool add_disjoint(Atom p, Atom q);

  [[nodiscard]] bool disjoint(Atom p, Atom q) const;
  /// The excludents of `p`; empty for atoms the background never mentions.
  [[nodiscard]] const std::set<Atom>& excludents(Atom p) const;

  [[nodiscard]] const std::set<Pair>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] const ExcludentMap& excludent_map() const noexcept { return excludents_; }
  [[nodiscard]] std::set<Atom> atoms() const;
  [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }

  friend bool operator==(const Background& lhs, const Background& rhs) { return lhs.pairs_ == rhs.pairs_; }

 private:
  std::set<Pair> pairs_;
  ExcludentMap excludents_;
};

/// Free-function form of Background::excludents.
inline const std::set<Atom>& excludents(const Background& b, Atom p) { return b.excludents(p); }

}  // namespace cground
