#pragma once

// Seeded instance generators for property and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "cground/entail.hpp"
#include "cground/rule_file.hpp"

namespace support {

using cground::Atom;
using cground::Background;
using cground::DefiniteClause;
using cground::HornExpression;
using cground::RuleFile;

struct RandomShape {
  int base_atoms = 4;       // each gets a complement not_x
  int max_clauses = 10;
  int max_stakeholders = 4;
  int max_antecedent = 3;
  double extra_pair_rate = 0.3;  // chance of one more disjoint pair between base atoms
};

inline std::vector<Atom> base_atoms(const std::string& prefix, int n) {
  std::vector<Atom> out;
  for (int i = 0; i < n; ++i) out.emplace_back(prefix + std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Background with x / not_x for every base atom, plus occasional extra pairs.
inline Background random_background(std::mt19937_64& rng, const std::vector<Atom>& base, double extra_rate,
                                    std::vector<Atom>& all) {
  Background b;
  all.clear();
  for (Atom a : base) {
    Atom neg("not_" + a.name());
    b.add_disjoint(a, neg);
    all.push_back(a);
    all.push_back(neg);
  }
  std::bernoulli_distribution extra(extra_rate);
  if (base.size() >= 2 && extra(rng)) {
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    const auto i = pick(rng), j = pick(rng);
    if (i != j) b.add_disjoint(base[i], base[j]);
  }
  return b;
}

inline DefiniteClause random_clause(std::mt19937_64& rng, const std::vector<Atom>& atoms, int max_antecedent) {
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::uniform_int_distribution<int> size(0, max_antecedent);
  while (true) {
    const Atom head = atoms[pick(rng)];
    std::vector<Atom> body;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) body.push_back(atoms[pick(rng)]);
    DefiniteClause c(body, head);
    if (!c.is_trivial()) return c;
  }
}

/// A random rule file; every atom has its complement as an excludent.
inline RuleFile random_rule_file(std::mt19937_64& rng, const RandomShape& shape = {}) {
  std::vector<Atom> all;
  RuleFile rf;
  rf.background = random_background(rng, base_atoms("", shape.base_atoms), shape.extra_pair_rate, all);
  std::uniform_int_distribution<int> clauses(1, shape.max_clauses);
  std::uniform_int_distribution<int> agents(1, shape.max_stakeholders);
  const int n = clauses(rng);
  const int m = agents(rng);
  for (int id = 1; id <= m; ++id) rf.stakeholders.push_back({id, {}});
  std::uniform_int_distribution<int> owner(0, m - 1);
  for (int i = 0; i < n; ++i) {
    const int who = owner(rng);
    rf.stakeholders[who].rules.insert(random_clause(rng, all, shape.max_antecedent), {who + 1});
  }
  return rf;
}

/// A random expression over `atoms` (no background), for entailment tests.
inline std::vector<DefiniteClause> random_clauses(std::mt19937_64& rng, const std::vector<Atom>& atoms, int max_n,
                                                  int max_antecedent) {
  std::uniform_int_distribution<int> count(0, max_n);
  std::vector<DefiniteClause> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) out.push_back(random_clause(rng, atoms, max_antecedent));
  return out;
}

/// Some input rule has a condition disjoint from its conclusion.
inline bool has_self_defeating_rule(const RuleFile& rf) {
  for (const auto& s : rf.stakeholders) {
    for (const auto& c : s.rules.clauses()) {
      for (Atom a : c.antecedent()) {
        if (rf.background.disjoint(a, c.consequent())) return true;
      }
    }
  }
  return false;
}

/// Some stakeholder's rules entail one of its rules with a condition dropped.
inline bool has_implied_condition(const RuleFile& rf) {
  for (const auto& s : rf.stakeholders) {
    for (const auto& c : s.rules.clauses()) {
      for (Atom a : c.antecedent()) {
        if (cground::entails_clause(s.rules, cground::drop(c, a))) return true;
      }
    }
  }
  return false;
}

namespace detail {

inline void add(RuleFile& rf, int agent, std::vector<Atom> body, Atom head) {
  while (static_cast<int>(rf.stakeholders.size()) < agent) {
    rf.stakeholders.push_back({static_cast<int>(rf.stakeholders.size()) + 1, {}});
  }
  rf.stakeholders[agent - 1].rules.insert(DefiniteClause(std::move(body), head), {agent});
}

inline Atom pair(Background& b, const std::string& name) {
  Atom a(name), n("not_" + name);
  b.add_disjoint(a, n);
  return a;
}

inline Atom neg(const Atom& a) { return Atom("not_" + a.name()); }

/// The seven-rule reference shape over fresh atoms; needs two repairs.
inline void seven_rule_block(RuleFile& rf, const std::string& tag, int& agent) {
  auto& b = rf.background;
  const Atom p = pair(b, "p" + tag), q = pair(b, "q" + tag), s = pair(b, "s" + tag), t = pair(b, "t" + tag),
             u = pair(b, "u" + tag);
  add(rf, ++agent, {p}, s);
  add(rf, ++agent, {p, u}, neg(s));
  add(rf, ++agent, {t, neg(q)}, neg(s));
  add(rf, ++agent, {t}, p);
  add(rf, ++agent, {t, neg(u)}, neg(p));
  add(rf, ++agent, {s}, q);
  add(rf, ++agent, {t, u}, neg(q));
}

/// An exception rule overriding a general one; needs one repair.
inline void exception_block(RuleFile& rf, const std::string& tag, int& agent) {
  auto& b = rf.background;
  const Atom a = pair(b, "a" + tag), c = pair(b, "c" + tag), x = pair(b, "x" + tag);
  add(rf, ++agent, {a}, x);
  add(rf, ++agent, {a, c}, neg(x));
}

}  // namespace detail

/// A valid (acyclic, non-redundant, conflict-free) but incoherent instance
/// with exactly `clauses` input clauses (clauses >= 2, even or >= 7), built
/// from independent seven-rule and exception blocks, one stakeholder per clause.
inline RuleFile synthetic_instance(int clauses) {
  int blocks = clauses / 7, rest = clauses % 7;
  if (rest % 2 == 1) {
    --blocks;
    rest += 7;
  }
  RuleFile rf;
  int agent = 0;
  for (int i = 0; i < blocks; ++i) detail::seven_rule_block(rf, "_" + std::to_string(i), agent);
  for (int i = 0; i < rest / 2; ++i) detail::exception_block(rf, "_" + std::to_string(i), agent);
  return rf;
}

}  // namespace support
