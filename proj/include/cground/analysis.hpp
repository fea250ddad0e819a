#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "cground/background.hpp"
#include "cground/expression.hpp"

namespace cground {

/// Why a clause fails to be coherent with an expression.
struct Incoherence {
  enum class Kind {
    Entailed,  ///< the rest of the expression already entails the clause
    Clash,     ///< a derivation links it to a clause with an excludent consequent
  };
  DefiniteClause clause;
  Kind kind;
  /// Clash partner (Kind::Clash only).
  std::optional<DefiniteClause> other;
  /// For Kind::Clash: true when `clause` derives `other`, false when `other` derives `clause`.
  bool clause_derives_other = false;

  [[nodiscard]] std::string describe() const;
};

/// Coherence of a single clause `c` with `f` (c need not belong to f):
/// f \ {c} does not entail c, and no clause psi of f other than c is linked
/// to c by a derivation (either direction, w.r.t. f with c) while the
/// consequents are excludents of each other.
bool is_coherent_clause(const HornExpression& f, const DefiniteClause& c, const Background& b);
std::optional<Incoherence> incoherence_of(const HornExpression& f, const DefiniteClause& c, const Background& b);

/// Every member of `f` that is not coherent with `f`, with one witness each.
std::vector<Incoherence> incoherent_clauses(const HornExpression& f, const Background& b);
bool is_coherent(const HornExpression& f, const Background& b);

/// Members entailed by the remaining clauses.
std::vector<DefiniteClause> redundant_clauses(const HornExpression& f);
bool is_redundant(const HornExpression& f);

/// A directed cycle phi_1 -> ... -> phi_n -> phi_1 where each consequent
/// occurs in the next antecedent; nullopt when f is acyclic.
std::optional<std::vector<DefiniteClause>> find_cycle(const HornExpression& f);
bool is_cyclic(const HornExpression& f);

/// An incoherent pair psi =>_F phi whose consequents are excludents.
struct DependencyNode {
  DefiniteClause psi;
  DefiniteClause phi;
  friend auto operator<=>(const DependencyNode&, const DependencyNode&) = default;
  friend bool operator==(const DependencyNode&, const DependencyNode&) = default;
};

/// Nodes are the incoherent derivation pairs; an edge (u, v) says that the
/// derived clause of u takes part in a derivation of v's derived clause from
/// v's deriving clause. Edge direction is parent -> child.
struct DependencyGraph {
  std::vector<DependencyNode> nodes;                   // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted (parent, child)

  [[nodiscard]] bool empty() const noexcept { return nodes.empty(); }
  [[nodiscard]] bool has_parent(std::size_t node) const;
  [[nodiscard]] std::vector<std::size_t> parentless() const;
  [[nodiscard]] bool has_cycle() const;
};

/// The dependency graph of f.
///
/// A clause phi' takes part in a derivation of phi w.r.t. psi when it is an
/// intermediate step of some derivation sequence: it fires in the closure of
/// ant(psi), and a chain of such firing clauses, avoiding psi, carries its
/// consequent into the antecedent of phi. For acyclic f this is exactly the
/// set of clauses occurring in at least one derivation.
DependencyGraph dependency_graph(const HornExpression& f, const Background& b);

/// Lexicographically least parentless node; nullopt when the graph is empty
/// (or, for cyclic f, when every node has a parent).
std::optional<DependencyNode> find_safe_pair(const HornExpression& f, const Background& b);

/// A pair whose incoherence no single excludent weakening repairs.
struct ConflictWitness {
  DependencyNode pair;
  /// The weakenings of pair.phi that were tried and found incoherent.
  std::vector<DefiniteClause> tried;
};

/// Searches for a conflict: psi =>_F phi with excludent consequents such that
/// no phi^{+q}, q an excludent of some r in ant(psi) \ ant(phi), is coherent
/// with F \ {phi}.
///
/// When phi itself is entailed by F \ {phi}, the entailment half of the
/// coherence test is skipped for its weakenings: they are entailed for the
/// same reason phi is, which is a redundancy and is reported as such.
/// On non-redundant input this coincides with the plain definition.
std::optional<ConflictWitness> find_conflict(const HornExpression& f, const Background& b);
bool is_in_conflict(const HornExpression& f, const Background& b);

/// The weakenings of `phi` suggested by `psi`: phi^{+p} for every excludent p
/// of an atom in ant(psi) \ ant(phi). Canonical order, no duplicates.
std::vector<DefiniteClause> repair_candidates(const DefiniteClause& psi, const DefiniteClause& phi,
                                              const Background& b);

}  // namespace cground
