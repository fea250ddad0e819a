#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cground/postulates.hpp"
#include "cground/rule_file.hpp"

namespace cground {

struct SearchBounds {
  std::size_t max_added_atoms = 1;
  std::size_t max_weakenings = 2;
  /// Atoms that weakenings may add; defaults to every atom of the rule file.
  std::optional<std::set<Atom>> universe;
  /// Upper limit on the candidate count (enumerate_candidates) or on the
  /// partial candidates visited (search).
  std::uint64_t cap = 10'000'000;
};

class BoundsExplosion : public std::runtime_error {
 public:
  BoundsExplosion(std::uint64_t size, std::uint64_t cap);
  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }

 private:
  std::uint64_t size_;
};

/// Non-trivial weakenings of `c` adding at most `max_added` atoms of
/// `universe`: `c` itself first, then by number of added atoms, then canonical order.
std::vector<DefiniteClause> weakenings_of(const DefiniteClause& c, const std::set<Atom>& universe,
                                          std::size_t max_added);

/// Lazily walks the bounded candidate space: for every input clause, a
/// non-empty set of at most `max_weakenings` of its weakenings. Weakenings
/// whose antecedent contains two disjoint atoms are left out: under the
/// background they never fire and are as empty as a trivial clause. Added
/// clauses carry the provenance of the clause they weaken.
class CandidateStream {
 public:
  /// Throws BoundsExplosion when the space is larger than `bounds.cap`.
  CandidateStream(const RuleFile& rf, const SearchBounds& bounds);

  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
  std::optional<HornExpression> next();

 private:
  HornExpression united_;
  std::vector<DefiniteClause> inputs_;
  /// choices_[i]: index sets into options_[i]
  std::vector<std::vector<DefiniteClause>> options_;
  std::vector<std::vector<std::vector<std::size_t>>> choices_;
  std::vector<std::size_t> odometer_;
  std::uint64_t size_ = 0;
  bool done_ = false;
};

inline CandidateStream enumerate_candidates(const RuleFile& rf, const SearchBounds& bounds = {}) {
  return CandidateStream(rf, bounds);
}

struct SearchResult {
  /// Common grounds found, canonical order, no duplicates.
  std::vector<HornExpression> found;
  /// The whole bounded space was covered.
  bool exhausted = false;
  /// Partial candidates visited.
  std::uint64_t explored = 0;
};

struct SearchOptions {
  PostulateOptions postulates;
  /// Stop once this many grounds are found (exhausted is then false).
  std::optional<std::size_t> stop_after;
  /// Use the library predicates for pruning and screening instead of the
  /// internal bitmask engine. Slow; for cross-checking.
  bool reference_checks = false;
};

/// Every candidate of the bounded space that satisfies P1-P6.
///
/// Runs a depth-first walk over the input clauses and cuts a branch as soon
/// as the partial candidate is incoherent or entails a clash with an input
/// clause; adding clauses cannot undo either. Full candidates go through
/// check_all. Throws BoundsExplosion when more than `bounds.cap` partial
/// candidates would be visited.
SearchResult search(const RuleFile& rf, const SearchBounds& bounds = {}, const SearchOptions& options = {});

}  // namespace cground
