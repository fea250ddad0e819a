#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cground/analysis.hpp"
#include "cground/rule_file.hpp"

namespace cground {

enum class RefusalReason { Cyclic, Redundant, InConflict };

std::string to_string(RefusalReason r);

/// The three entry conditions of the weakening loop, with witnesses.
struct PreconditionReport {
  std::optional<std::vector<DefiniteClause>> cycle;
  std::vector<DefiniteClause> redundant;
  std::optional<ConflictWitness> conflict;

  [[nodiscard]] bool ok() const noexcept { return !cycle && redundant.empty() && !conflict; }
  [[nodiscard]] std::set<RefusalReason> reasons() const;
};

PreconditionReport check_preconditions(const HornExpression& f, const Background& b);

struct Rejection {
  DefiniteClause clause;
  std::string reason;
};

struct MergeIteration {
  std::size_t round = 0;
  DependencyNode safe_pair;
  DefiniteClause replaced;
  std::vector<DefiniteClause> added;
  std::vector<Rejection> rejected;
};

struct MergeTrace {
  std::vector<MergeIteration> iterations;
};

struct Refused {
  std::set<RefusalReason> reasons;  // never empty
  PreconditionReport details;
};

struct Ground {
  HornExpression expression;
  MergeTrace trace;
};

using MergeOutcome = std::variant<Refused, Ground>;

/// How the loop picks the pair to repair.
enum class PairSelection {
  Safe,  ///< least parentless node of the dependency graph
  /// Least node regardless of parents. Only for demonstrating why safety
  /// matters; the output is not guaranteed to be a common ground.
  AnyIncoherent,
};

struct MergeOptions {
  PairSelection selection = PairSelection::Safe;
};

/// Raised when a loop invariant that the correctness argument relies on
/// does not hold. Always a bug.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Computes a common ground for the stakeholders of `rf`.
///
/// Refuses cyclic, redundant or in-conflict input (reporting every reason
/// that applies). Otherwise, while the working expression is incoherent,
/// picks a pair (psi, phi) and replaces phi by those phi^{+p}, p an
/// excludent of an atom of ant(psi) \ ant(phi), that are coherent with the
/// expression without phi. Added clauses inherit phi's provenance.
MergeOutcome merge(const RuleFile& rf, const MergeOptions& options = {});
MergeOutcome merge(std::span<const HornExpression> inputs, const Background& b, const MergeOptions& options = {});

}  // namespace cground
