#include "cground/analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "cground/entail.hpp"

namespace cground {

namespace {

/// Clause indices grouped by consequent atom id.
using ConsequentIndex = std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>;

ConsequentIndex index_consequents(const std::vector<DefiniteClause>& clauses) {
  ConsequentIndex out;
  for (std::uint32_t i = 0; i < clauses.size(); ++i) out[clauses[i].consequent().id()].push_back(i);
  return out;
}

std::span<const std::uint32_t> with_consequent(const ConsequentIndex& index, Atom a) {
  auto it = index.find(a.id());
  if (it == index.end()) return {};
  return it->second;
}

std::optional<Incoherence> incoherence_impl(const HornExpression& f, const DefiniteClause& c,
                                            const Background& b, bool check_entailment) {
  const HornExpression g = f.with(c);
  ForwardChainer chainer(g);
  const std::size_t self = *chainer.index_of(c);

  if (check_entailment) {
    chainer.run(c.antecedent(), self);
    if (chainer.holds(c.consequent())) return Incoherence{c, Incoherence::Kind::Entailed, std::nullopt, false};
  }

  std::vector<std::size_t> partners;
  for (std::size_t i = 0; i < chainer.size(); ++i) {
    if (i != self && b.disjoint(chainer.clauses()[i].consequent(), c.consequent())) partners.push_back(i);
  }
  if (partners.empty()) return std::nullopt;

  chainer.run(c.antecedent());
  for (std::size_t i : partners) {
    if (chainer.holds_all(chainer.clauses()[i].antecedent())) {
      return Incoherence{c, Incoherence::Kind::Clash, chainer.clauses()[i], true};
    }
  }
  for (std::size_t i : partners) {
    const auto& psi = chainer.clauses()[i];
    chainer.run(psi.antecedent());
    if (chainer.holds_all(c.antecedent())) return Incoherence{c, Incoherence::Kind::Clash, psi, false};
  }
  return std::nullopt;
}

}  // namespace

std::string Incoherence::describe() const {
  if (kind == Kind::Entailed) return "is entailed by the remaining clauses";
  const std::string other_text = other ? other->to_string() : std::string("?");
  return clause_derives_other ? "derives clashing clause '" + other_text + "'"
                              : "is derived by clashing clause '" + other_text + "'";
}

std::optional<Incoherence> incoherence_of(const HornExpression& f, const DefiniteClause& c, const Background& b) {
  return incoherence_impl(f, c, b, true);
}

bool is_coherent_clause(const HornExpression& f, const DefiniteClause& c, const Background& b) {
  return !incoherence_of(f, c, b).has_value();
}

std::vector<Incoherence> incoherent_clauses(const HornExpression& f, const Background& b) {
  const auto clauses = f.to_vector();
  const std::size_t n = clauses.size();
  ForwardChainer chainer(clauses);
  const auto by_consequent = index_consequents(clauses);
  std::vector<std::optional<Incoherence>> witness(n);

  for (std::size_t i = 0; i < n; ++i) {
    chainer.run(clauses[i].antecedent(), i);
    if (chainer.holds(clauses[i].consequent())) {
      witness[i] = Incoherence{clauses[i], Incoherence::Kind::Entailed, std::nullopt, false};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& excl = b.excludents(clauses[i].consequent());
    if (excl.empty()) continue;
    bool ran = false;
    for (Atom e : excl) {
      for (std::uint32_t j : with_consequent(by_consequent, e)) {
        if (!ran) {
          chainer.run(clauses[i].antecedent());
          ran = true;
        }
        if (!chainer.holds_all(clauses[j].antecedent())) continue;
        if (!witness[i]) witness[i] = Incoherence{clauses[i], Incoherence::Kind::Clash, clauses[j], true};
        if (!witness[j]) witness[j] = Incoherence{clauses[j], Incoherence::Kind::Clash, clauses[i], false};
      }
    }
  }
  std::vector<Incoherence> out;
  for (auto& w : witness) {
    if (w) out.push_back(std::move(*w));
  }
  return out;
}

bool is_coherent(const HornExpression& f, const Background& b) { return incoherent_clauses(f, b).empty(); }

std::vector<DefiniteClause> redundant_clauses(const HornExpression& f) {
  const auto clauses = f.to_vector();
  ForwardChainer chainer(clauses);
  std::vector<DefiniteClause> out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    chainer.run(clauses[i].antecedent(), i);
    if (chainer.holds(clauses[i].consequent())) out.push_back(clauses[i]);
  }
  return out;
}

bool is_redundant(const HornExpression& f) { return !redundant_clauses(f).empty(); }

std::optional<std::vector<DefiniteClause>> find_cycle(const HornExpression& f) {
  const auto clauses = f.to_vector();
  const ForwardChainer graph(clauses);  // occurrences() doubles as the successor relation
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> colour(clauses.size(), White);
  std::vector<std::size_t> parent(clauses.size(), ForwardChainer::npos);

  for (std::size_t root = 0; root < clauses.size(); ++root) {
    if (colour[root] != White) continue;
    // (clause, next successor position)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [node, pos] = stack.back();
      const auto succ = graph.occurrences(clauses[node].consequent());
      if (pos == succ.size()) {
        colour[node] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t next = succ[pos++];
      if (colour[next] == Grey) {
        std::vector<DefiniteClause> cycle;
        for (std::size_t k = node; k != next; k = parent[k]) cycle.push_back(clauses[k]);
        cycle.push_back(clauses[next]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (colour[next] == White) {
        colour[next] = Grey;
        parent[next] = node;
        stack.emplace_back(next, 0);
      }
    }
  }
  return std::nullopt;
}

bool is_cyclic(const HornExpression& f) { return find_cycle(f).has_value(); }

bool DependencyGraph::has_parent(std::size_t node) const {
  return std::any_of(edges.begin(), edges.end(), [node](const auto& e) { return e.second == node; });
}

std::vector<std::size_t> DependencyGraph::parentless() const {
  std::vector<bool> child(nodes.size(), false);
  for (const auto& [from, to] : edges) child[to] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!child[i]) out.push_back(i);
  }
  return out;
}

bool DependencyGraph::has_cycle() const {
  std::vector<std::size_t> indegree(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> out(nodes.size());
  for (const auto& [from, to] : edges) {
    ++indegree[to];
    out[from].push_back(to);
  }
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  std::size_t seen = 0;
  while (seen < queue.size()) {
    for (std::size_t next : out[queue[seen++]]) {
      if (--indegree[next] == 0) queue.push_back(next);
    }
  }
  return seen != nodes.size();
}

DependencyGraph dependency_graph(const HornExpression& f, const Background& b) {
  const auto clauses = f.to_vector();
  const std::size_t n = clauses.size();
  ForwardChainer chainer(clauses);
  const auto by_consequent = index_consequents(clauses);

  struct RawNode {
    std::uint32_t psi;
    std::uint32_t phi;
    std::vector<std::uint32_t> participants;
  };
  std::vector<RawNode> raw;

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> frontier;

  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& excl = b.excludents(clauses[i].consequent());
    bool ran = false;
    for (Atom e : excl) {
      for (std::uint32_t j : with_consequent(by_consequent, e)) {
        if (!ran) {
          chainer.run(clauses[i].antecedent());
          ran = true;
        }
        if (!chainer.holds_all(clauses[j].antecedent())) continue;

        // Walk backwards from phi through clauses that fire from ant(psi),
        // never passing through psi: whatever is reached can be an
        // intermediate step of a derivation of phi w.r.t. psi.
        RawNode node{i, j, {}};
        ++epoch;
        stamp[j] = epoch;
        stamp[i] = epoch;
        frontier.assign(1, j);
        while (!frontier.empty()) {
          const std::uint32_t k = frontier.back();
          frontier.pop_back();
          for (Atom a : clauses[k].antecedent()) {
            for (std::uint32_t m : with_consequent(by_consequent, a)) {
              if (stamp[m] == epoch || !chainer.fired(m)) continue;
              stamp[m] = epoch;
              node.participants.push_back(m);
              frontier.push_back(m);
            }
          }
        }
        raw.push_back(std::move(node));
      }
    }
  }

  std::vector<std::size_t> order(raw.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(raw[x].psi, raw[x].phi) < std::tie(raw[y].psi, raw[y].phi);
  });

  DependencyGraph graph;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> nodes_by_phi;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& r = raw[order[pos]];
    graph.nodes.push_back({clauses[r.psi], clauses[r.phi]});
    nodes_by_phi[r.phi].push_back(pos);
  }
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    for (std::uint32_t m : raw[order[pos]].participants) {
      auto it = nodes_by_phi.find(m);
      if (it == nodes_by_phi.end()) continue;
      for (std::size_t parent : it->second) graph.edges.emplace_back(parent, pos);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

std::optional<DependencyNode> find_safe_pair(const HornExpression& f, const Background& b) {
  const auto graph = dependency_graph(f, b);
  const auto roots = graph.parentless();
  if (roots.empty()) return std::nullopt;
  return graph.nodes[roots.front()];
}

std::vector<DefiniteClause> repair_candidates(const DefiniteClause& psi, const DefiniteClause& phi,
                                              const Background& b) {
  std::vector<DefiniteClause> out;
  for (Atom l : psi.antecedent()) {
    if (phi.in_antecedent(l)) continue;
    for (Atom p : b.excludents(l)) out.push_back(weaken(phi, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ConflictWitness> find_conflict(const HornExpression& f, const Background& b) {
  const auto graph = dependency_graph(f, b);
  for (const auto& node : graph.nodes) {
    const HornExpression rest = f.without(node.phi);
    const bool phi_redundant = entails_clause(rest, node.phi);
    ConflictWitness witness{node, {}};
    bool repairable = false;
    for (const auto& candidate : repair_candidates(node.psi, node.phi, b)) {
      if (!incoherence_impl(rest, candidate, b, !phi_redundant)) {
        repairable = true;
        break;
      }
      witness.tried.push_back(candidate);
    }
    if (!repairable) return witness;
  }
  return std::nullopt;
}

bool is_in_conflict(const HornExpression& f, const Background& b) { return find_conflict(f, b).has_value(); }

}  // namespace cground
