#include "cground/merge.hpp"

#include <algorithm>

#include "cground/entail.hpp"

namespace cground {

namespace {

std::optional<DependencyNode> select_pair(const HornExpression& f, const Background& b, PairSelection selection) {
  if (selection == PairSelection::Safe) return find_safe_pair(f, b);
  auto graph = dependency_graph(f, b);
  if (graph.empty()) return std::nullopt;
  return graph.nodes.front();
}

void require(bool condition, const std::string& what) {
  if (!condition) throw InternalInvariantViolation(what);
}

}  // namespace

std::string to_string(RefusalReason r) {
  switch (r) {
    case RefusalReason::Cyclic: return "cyclic";
    case RefusalReason::Redundant: return "redundant";
    case RefusalReason::InConflict: return "in_conflict";
  }
  return "?";
}

std::set<RefusalReason> PreconditionReport::reasons() const {
  std::set<RefusalReason> out;
  if (cycle) out.insert(RefusalReason::Cyclic);
  if (!redundant.empty()) out.insert(RefusalReason::Redundant);
  if (conflict) out.insert(RefusalReason::InConflict);
  return out;
}

PreconditionReport check_preconditions(const HornExpression& f, const Background& b) {
  return {find_cycle(f), redundant_clauses(f), find_conflict(f, b)};
}

MergeOutcome merge(const RuleFile& rf, const MergeOptions& options) {
  const auto inputs = rf.expressions();
  return merge(inputs, rf.background, options);
}

MergeOutcome merge(std::span<const HornExpression> inputs, const Background& b, const MergeOptions& options) {
  const HornExpression original = unite(inputs);
  auto preconditions = check_preconditions(original, b);
  if (!preconditions.ok()) {
    auto reasons = preconditions.reasons();
    return Refused{std::move(reasons), std::move(preconditions)};
  }

  HornExpression f = original;
  MergeTrace trace;
  while (!is_coherent(f, b)) {
    const std::size_t round = trace.iterations.size() + 1;
    require(round <= original.size(), "iteration " + std::to_string(round) + " exceeds the input clause count " +
                                          std::to_string(original.size()));

    const auto pair = select_pair(f, b, options.selection);
    require(pair.has_value(), "expression is incoherent but its dependency graph has no parentless node");
    const auto& [psi, phi] = *pair;
    require(original.contains(psi) && original.contains(phi),
            "selected pair (" + psi.to_string() + ", " + phi.to_string() + ") is not made of input clauses");

    const HornExpression rest = f.without(phi);
    MergeIteration it{round, *pair, phi, {}, {}};
    for (const auto& candidate : repair_candidates(psi, phi, b)) {
      if (auto why = incoherence_of(rest, candidate, b)) {
        it.rejected.push_back({candidate, why->describe()});
      } else {
        it.added.push_back(candidate);
      }
    }
    require(!it.added.empty(), "no coherent weakening of '" + phi.to_string() + "' exists");

    HornExpression next = rest;
    for (const auto& c : it.added) next.insert(c, f.provenance(phi));
    for (const auto& c : it.added) {
      auto why = incoherence_of(next.without(c), c, b);
      require(!why, "weakenings added together are not mutually coherent: '" + c.to_string() + "' " +
                        (why ? why->describe() : std::string()));
    }
    for (const auto& c : next.clauses()) {
      require(entails_clause(f, c), "weakening step lost entailment of '" + c.to_string() + "'");
    }

    f = std::move(next);
    trace.iterations.push_back(std::move(it));
  }
  return Ground{std::move(f), std::move(trace)};
}

}  // namespace cground
