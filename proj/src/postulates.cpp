#include "cground/postulates.hpp"

#include <algorithm>

#include "cground/analysis.hpp"
#include "cground/entail.hpp"

namespace cground {

namespace {

Verdict fail(std::vector<DefiniteClause> witness, std::string note) {
  return {false, false, std::move(witness), std::move(note)};
}

}  // namespace

std::string to_string(Postulate p) { return "P" + std::to_string(static_cast<int>(p) + 1); }

bool single_clause_entails(const DefiniteClause& psi, const DefiniteClause& phi) {
  if (phi.is_trivial()) return true;
  if (psi.consequent() != phi.consequent()) return false;
  const auto a = psi.antecedent();
  const auto b = phi.antecedent();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Verdict check_p1(const HornExpression& f, const Background& b) {
  const auto bad = incoherent_clauses(f, b);
  if (bad.empty()) return {};
  const auto& w = bad.front();
  std::vector<DefiniteClause> witness{w.clause};
  if (w.other) witness.push_back(*w.other);
  return fail(std::move(witness), "'" + w.clause.to_string() + "' " + w.describe());
}

Verdict check_p2(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b) {
  const HornExpression all = unite(inputs);
  if (!is_coherent(all, b)) return {true, true, {}, "inputs are incoherent"};
  for (const auto& c : all.clauses()) {
    if (!entails_clause(f, c)) return fail({c}, "input clause '" + c.to_string() + "' is not entailed");
  }
  for (const auto& c : f.clauses()) {
    if (!entails_clause(all, c)) return fail({c}, "'" + c.to_string() + "' is not entailed by the inputs");
  }
  return {};
}

Verdict check_p3(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b) {
  const auto clauses = f.to_vector();
  ForwardChainer chainer(clauses);
  for (const auto& fi : inputs) {
    for (const auto& phi : fi.clauses()) {
      const auto& excl = b.excludents(phi.consequent());
      if (excl.empty()) continue;
      chainer.run(phi.antecedent());
      for (Atom p : excl) {
        if (!chainer.holds(p)) continue;
        DefiniteClause clash({phi.antecedent().begin(), phi.antecedent().end()}, p);
        return fail({phi, clash}, "'" + clash.to_string() + "' is entailed, clashing with input '" +
                                      phi.to_string() + "'");
      }
    }
  }
  return {};
}

Verdict check_p4(std::span<const HornExpression> inputs, const HornExpression& f, const Background&) {
  const HornExpression all = unite(inputs);
  for (const auto& phi : f.clauses()) {
    const bool covered = std::ranges::any_of(all.clauses(), [&](const DefiniteClause& psi) {
      return entails_clause(HornExpression{psi}, phi);
    });
    if (!covered) return fail({phi}, "'" + phi.to_string() + "' is not entailed by any single input clause");
  }
  return {};
}

Verdict check_p5(std::span<const HornExpression> inputs, const HornExpression& f, const Background&) {
  const HornExpression all = unite(inputs);
  for (const auto& phi : all.clauses()) {
    const HornExpression single{phi};
    const bool kept = std::ranges::any_of(
        f.clauses(), [&](const DefiniteClause& psi) { return !psi.is_trivial() && entails_clause(single, psi); });
    if (!kept) return fail({phi}, "no clause of the result weakens input '" + phi.to_string() + "'");
  }
  return {};
}

std::vector<P6Violation> p6_violations(std::span<const HornExpression> inputs, const HornExpression& f,
                                       const Background& b, P6Scope scope, bool first_only) {
  std::vector<P6Violation> out;
  for (const auto& phi : f.clauses()) {
    for (Atom p : phi.antecedent()) {
      const auto& excl = b.excludents(p);
      if (excl.empty()) continue;
      std::vector<DefiniteClause> subs;
      for (Atom q : excl) subs.push_back(substitute(phi, p, q));

      const auto keeps_coherent = [&](const DefiniteClause& s) { return is_coherent(f.with(s), b); };
      const bool premise = scope == P6Scope::AllExcludents ? std::ranges::all_of(subs, keeps_coherent)
                                                           : std::ranges::any_of(subs, keeps_coherent);
      if (!premise) continue;

      const DefiniteClause dropped = drop(phi, p);
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto entailed = std::ranges::find_if(subs, [&](const auto& s) { return entails_clause(inputs[i], s); });
        if (entailed == subs.end()) continue;
        if (entails_clause(inputs[i], dropped)) {
          out.push_back({phi, p, dropped, *entailed, i + 1});
          if (first_only) return out;
          break;
        }
      }
    }
  }
  return out;
}

Verdict check_p6(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b,
                 P6Scope scope) {
  const auto found = p6_violations(inputs, f, b, scope, true);
  if (found.empty()) return {};
  const auto& v = found.front();
  return fail({v.clause, v.dropped, v.entailed}, "stakeholder " + std::to_string(v.stakeholder) +
                                                     " entails both '" + v.entailed.to_string() + "' and '" +
                                                     v.dropped.to_string() + "', so atom '" + v.atom.name() +
                                                     "' in '" + v.clause.to_string() + "' is unwarranted");
}

bool PostulateReport::all_pass() const {
  return std::ranges::all_of(verdicts, [](const Verdict& v) { return v.pass; });
}

PostulateReport check_all(std::span<const HornExpression> inputs, const HornExpression& f, const Background& b,
                          const PostulateOptions& options) {
  return {{check_p1(f, b), check_p2(inputs, f, b), check_p3(inputs, f, b), check_p4(inputs, f, b),
           check_p5(inputs, f, b), check_p6(inputs, f, b, options.p6_scope)}};
}

}  // namespace cground
