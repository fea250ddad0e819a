#include "cground/report.hpp"

#include <sstream>

namespace cground {

namespace {

Json clause_list(const std::vector<DefiniteClause>& cs, const Background& b) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(render_clause(c, b));
  return out;
}

Json expression_list(const HornExpression& f, const Background& b) { return clause_list(f.to_vector(), b); }

std::string severity_name(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string pair_text(const DependencyNode& n, const Background& b) {
  return render_clause(n.psi, b) + " ⊣ " + render_clause(n.phi, b);
}

}  // namespace

Json diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    out.push_back({{"code", d.code},
                   {"severity", severity_name(d.severity)},
                   {"line", d.line},
                   {"col", d.col},
                   {"msg", d.message}});
  }
  return out;
}

Json parse_report(const ParseOutcome& outcome) {
  Json out;
  out["status"] = outcome.ok() ? "ok" : "error";
  out["diagnostics"] = diagnostics_json(outcome.diagnostics);
  if (!outcome.ok()) return out;
  const auto& rf = *outcome.file;
  Json atoms = Json::array();
  for (Atom a : rf.atoms()) atoms.push_back(a.name());
  out["atoms"] = std::move(atoms);
  Json disjoint = Json::array();
  for (const auto& [p, q] : rf.background.pairs()) disjoint.push_back({p.name(), q.name()});
  out["disjoint"] = std::move(disjoint);
  Json agents = Json::array();
  for (const auto& s : rf.stakeholders) {
    agents.push_back({{"id", s.id}, {"rules", expression_list(s.rules, rf.background)}});
  }
  out["agents"] = std::move(agents);
  return out;
}

Json check_report(const HornExpression& f, const Background& b, const PreconditionReport& pre) {
  const auto incoherent = incoherent_clauses(f, b);
  Json witnesses;
  Json inc = Json::array();
  for (const auto& w : incoherent) {
    Json item{{"clause", render_clause(w.clause, b)}, {"reason", w.describe()}};
    if (w.other) item["other"] = render_clause(*w.other, b);
    inc.push_back(std::move(item));
  }
  witnesses["incoherent"] = std::move(inc);
  witnesses["cycle"] = pre.cycle ? clause_list(*pre.cycle, b) : Json(nullptr);
  witnesses["redundant"] = clause_list(pre.redundant, b);
  if (pre.conflict) {
    witnesses["conflict"] = {{"psi", render_clause(pre.conflict->pair.psi, b)},
                             {"phi", render_clause(pre.conflict->pair.phi, b)},
                             {"tried", clause_list(pre.conflict->tried, b)}};
  } else {
    witnesses["conflict"] = nullptr;
  }

  Json out;
  out["coherent"] = incoherent.empty();
  out["cyclic"] = pre.cycle.has_value();
  out["redundant"] = !pre.redundant.empty();
  out["in_conflict"] = pre.conflict.has_value();
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json trace_json(const MergeTrace& trace, const Background& b) {
  Json iterations = Json::array();
  for (const auto& it : trace.iterations) {
    Json rejected = Json::array();
    for (const auto& r : it.rejected) rejected.push_back({{"clause", render_clause(r.clause, b)}, {"reason", r.reason}});
    iterations.push_back({{"round", it.round},
                          {"safe_pair", {{"psi", render_clause(it.safe_pair.psi, b)},
                                         {"phi", render_clause(it.safe_pair.phi, b)}}},
                          {"replaced", render_clause(it.replaced, b)},
                          {"added", clause_list(it.added, b)},
                          {"rejected", std::move(rejected)}});
  }
  return {{"iterations", std::move(iterations)}};
}

Json refusal_json(const Refused& refused, const Background& b) {
  Json reasons = Json::array();
  for (auto r : refused.reasons) reasons.push_back(to_string(r));
  Json out{{"status", "refused"}, {"reasons", std::move(reasons)}};
  const auto& d = refused.details;
  if (d.cycle) out["cycle"] = clause_list(*d.cycle, b);
  if (!d.redundant.empty()) out["redundant"] = clause_list(d.redundant, b);
  if (d.conflict) {
    out["conflict"] = {{"psi", render_clause(d.conflict->pair.psi, b)},
                       {"phi", render_clause(d.conflict->pair.phi, b)},
                       {"tried", clause_list(d.conflict->tried, b)}};
  }
  return out;
}

Json postulate_json(const PostulateReport& report, const Background& b) {
  Json out;
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& v = report.verdicts[i];
    Json item{{"pass", v.pass}};
    if (v.vacuous) item["vacuous"] = true;
    if (!v.pass) {
      item["witness"] = clause_list(v.witness, b);
      item["note"] = v.note;
    }
    out[to_string(static_cast<Postulate>(i))] = std::move(item);
  }
  return out;
}

Json oracle_json(const SearchResult& result, const Background& b) {
  Json grounds = Json::array();
  for (const auto& g : result.found) grounds.push_back(expression_list(g, b));
  return {{"found_count", result.found.size()},
          {"exhausted", result.exhausted},
          {"explored", result.explored},
          {"grounds", std::move(grounds)}};
}

std::string dependency_dot(const DependencyGraph& graph, const Background& b) {
  std::ostringstream out;
  out << "digraph dependencies {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(pair_text(graph.nodes[i], b)) << "\"];\n";
  }
  for (const auto& [from, to] : graph.edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cground
