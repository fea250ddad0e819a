#include <doctest.h>

#include <random>

#include "cground/background.hpp"
#include "cground/expression.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace cground;
using support::at;
using support::cl;

TEST_CASE("atoms are interned and ordered by name") {
  Atom a("alpha"), b("beta"), a2(std::string("alp") + "ha");
  CHECK(a == a2);
  CHECK(a.id() == a2.id());
  CHECK(a < b);
  CHECK(Atom::universe_size() > a.id());
  CHECK_THROWS_AS(Atom(""), std::invalid_argument);
  CHECK_THROWS_AS(Atom("two words"), std::invalid_argument);
  CHECK_THROWS_AS(Atom("a-b"), std::invalid_argument);
  CHECK(Atom::is_valid_name("Case_Sensitive_9"));
  CHECK(Atom("X") != Atom("x"));
}

TEST_CASE("clause antecedents are sets") {
  const DefiniteClause c({at("q"), at("p"), at("q")}, at("r"));
  CHECK(c.antecedent().size() == 2);
  CHECK(c == DefiniteClause({at("p"), at("q")}, at("r")));
  CHECK(c.to_string() == "p & q -> r");
  CHECK(DefiniteClause({}, at("r")).to_string() == "-> r");
  CHECK(DefiniteClause({at("r")}, at("r")).is_trivial());
  CHECK_FALSE(c.is_trivial());
}

TEST_CASE("clause order is lexicographic on antecedent then consequent") {
  CHECK(cl("a -> z") < cl("a & b -> c"));
  CHECK(cl("a & b -> c") < cl("a & c -> b"));
  CHECK(cl("p -> q") < cl("p -> r"));
  CHECK(cl("-> z") < cl("a -> a0"));
}

TEST_CASE("weaken") {
  CHECK(weaken(cl("illegalActivity -> policeCall"), at("adult")) == cl("illegalActivity & adult -> policeCall"));
  CHECK(weaken(cl("p -> q"), at("p")) == cl("p -> q"));
  CHECK(weaken(cl("t -> p"), at("u")) == cl("t & u -> p"));
}

TEST_CASE("drop") {
  CHECK(drop(cl("p & s -> q"), at("s")) == cl("p -> q"));
  CHECK_THROWS_AS(drop(cl("p -> q"), at("q")), AtomNotInAntecedent);
  CHECK(drop(cl("p & s & !r -> q"), at("!r")) == cl("p & s -> q"));
}

TEST_CASE("substitute") {
  CHECK(substitute(cl("illegal & lowBattery -> police"), at("lowBattery"), at("charge")) ==
        cl("illegal & charge -> police"));
  CHECK(substitute(cl("p & s -> q"), at("s"), at("s")) == cl("p & s -> q"));
  CHECK(substitute(cl("p & s & !r -> q"), at("s"), at("!s")) == cl("p & !s & !r -> q"));
  CHECK_THROWS_AS(substitute(cl("p -> q"), at("s"), at("t")), AtomNotInAntecedent);
}

TEST_CASE("editing operators compose on random clauses") {
  std::mt19937_64 rng(7);
  const std::vector<Atom> atoms = {at("a"), at("b"), at("c"), at("d"), at("e"), at("f")};
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto c = support::random_clause(rng, atoms, 4);
    const Atom p = atoms[pick(rng)], q = atoms[pick(rng)];
    if (!c.in_antecedent(p)) {
      CHECK(drop(weaken(c, p), p) == c);
    } else {
      CHECK(substitute(c, p, q) == weaken(drop(c, p), q));
    }
  }
}

TEST_CASE("excludents") {
  Background b{{at("parentsAlert"), at("policeCall")},
               {at("child"), at("adult")},
               {at("child"), at("teen")},
               {at("supervised"), at("unsupervised")}};
  CHECK(b.excludents(at("child")) == std::set<Atom>{at("adult"), at("teen")});
  CHECK(Background{}.excludents(at("p")).empty());
  Background u{{at("u"), at("!u")}};
  CHECK(excludents(u, at("!u")) == std::set<Atom>{at("u")});
  CHECK_THROWS_AS(b.add_disjoint(at("p"), at("p")), ReflexiveDisjointness);
  CHECK_FALSE(b.add_disjoint(at("adult"), at("child")));
  CHECK(b.size() == 4);
}

TEST_CASE("excludents are symmetric and match the constraint semantics") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<Atom> atoms;
    const auto b = support::random_background(rng, support::base_atoms("", 4), 0.8, atoms);
    const auto& pairs = b.pairs();
    for (Atom p : atoms) {
      for (Atom q : atoms) {
        CHECK(b.excludents(p).contains(q) == b.excludents(q).contains(p));
        // B |= (p & q) -> false iff no world satisfying every constraint has p and q.
        bool consistent = false;
        const unsigned n = static_cast<unsigned>(atoms.size());
        for (std::uint32_t w = 0; w < (1u << n) && !consistent; ++w) {
          const auto holds = [&](Atom a) {
            return (w >> static_cast<unsigned>(std::find(atoms.begin(), atoms.end(), a) - atoms.begin()) & 1u) != 0;
          };
          if (!holds(p) || !holds(q)) continue;
          consistent = std::none_of(pairs.begin(), pairs.end(),
                                    [&](const auto& pr) { return holds(pr.first) && holds(pr.second); });
        }
        CHECK(b.excludents(p).contains(q) == !consistent);
      }
    }
  }
}

TEST_CASE("horn expressions keep provenance") {
  HornExpression f;
  CHECK(f.insert(cl("p -> q"), {1}));
  CHECK_FALSE(f.insert(cl("p -> q"), {2}));
  CHECK(f.provenance(cl("p -> q")) == std::set<StakeholderId>{1, 2});
  CHECK(f.provenance(cl("x -> y")).empty());
  CHECK(f.size() == 1);
  const auto g = f.with(cl("a -> b"));
  CHECK(g.size() == 2);
  CHECK(f.size() == 1);
  CHECK(g.without(cl("a -> b")) == f);
  CHECK(g.atoms() == std::set<Atom>{at("a"), at("b"), at("p"), at("q")});
  HornExpression h{cl("p -> q")};
  CHECK(h.same_clauses(f));
  CHECK_FALSE(h == f);
  const std::vector<HornExpression> parts{HornExpression{cl("p -> q")}, f, HornExpression{cl("a -> b")}};
  CHECK(unite(parts).size() == 2);
}
