#include <doctest.h>

#include <algorithm>
#include <random>

#include "cground/merge.hpp"
#include "cground/postulates.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace cground;
using support::cl;

namespace {

const Ground& ground(const MergeOutcome& out) {
  REQUIRE(std::holds_alternative<Ground>(out));
  return std::get<Ground>(out);
}

std::set<RefusalReason> refusal(const MergeOutcome& out) {
  REQUIRE(std::holds_alternative<Refused>(out));
  return std::get<Refused>(out).reasons;
}

}  // namespace

TEST_CASE("seven-rule example reaches the reference ground") {
  const auto g = ground(merge(support::load("seven_rules.rules")));
  CHECK(g.expression.same_clauses(support::load("seven_rules_ground.rules").united()));
  REQUIRE(g.trace.iterations.size() == 2);
  CHECK(g.trace.iterations[0].replaced == cl("t -> p"));
  CHECK(g.trace.iterations[0].added == std::vector<DefiniteClause>{cl("t & u -> p")});
  CHECK(g.trace.iterations[1].replaced == cl("p -> s"));
  CHECK(g.trace.iterations[1].added == std::vector<DefiniteClause>{cl("p & !u -> s")});
  CHECK(g.expression.provenance(cl("t & u -> p")) == std::set<StakeholderId>{4});
}

TEST_CASE("police robot") {
  const auto g = ground(merge(support::load("police_robot.rules")));
  CHECK(g.expression.same_clauses(support::expr({"adult & illegalActivity -> policeCall",
                                                 "illegalActivity & teen -> policeCall", "lowBattery -> charge",
                                                 "child & illegalActivity -> parentsAlert"})));
  REQUIRE(g.trace.iterations.size() == 1);
  CHECK(g.trace.iterations[0].rejected.empty());
}

TEST_CASE("trivial inputs") {
  const auto empty = ground(merge(support::load("empty.rules")));
  CHECK(empty.expression.empty());
  CHECK(empty.trace.iterations.empty());
  const auto ok = support::load("seven_rules_ground.rules");
  CHECK(ground(merge(ok)).expression == ok.united());
}

TEST_CASE("gate") {
  CHECK(refusal(merge(support::load("cyclic.rules"))) == std::set<RefusalReason>{RefusalReason::Cyclic});
  CHECK(refusal(merge(support::load("in_conflict.rules"))) == std::set<RefusalReason>{RefusalReason::InConflict});
  CHECK(refusal(merge(support::load("redundant.rules"))) == std::set<RefusalReason>{RefusalReason::Redundant});
  CHECK(refusal(merge(support::load("police_conflict.rules"))) ==
        std::set<RefusalReason>{RefusalReason::InConflict});
  // Every applicable reason is reported.
  const auto rf = parse("disjoint p !p\nagent 1 { p -> q\n q -> p\n p -> !q\n p & r -> q }");
  CHECK(refusal(merge(rf)).size() >= 2);
  CHECK(to_string(RefusalReason::InConflict) == "in_conflict");
}

TEST_CASE("candidate entailed by the rest is rejected") {
  const auto rf = support::load("entailed_repair.rules");
  const auto pre = check_preconditions(rf.united(), rf.background);
  REQUIRE(pre.conflict);
  CHECK(pre.conflict->pair.phi == cl("p & q -> s"));
  CHECK(pre.conflict->tried == std::vector<DefiniteClause>{cl("p & q & r -> s")});
  CHECK(refusal(merge(rf)) == std::set<RefusalReason>{RefusalReason::InConflict});
}

// Inputs the gate admits although the loop cannot deliver a common ground.

TEST_CASE("self-defeating rule is kept and fails P3") {
  const auto rf = support::load("self_defeating.rules");
  const auto g = ground(merge(rf));
  CHECK(g.expression.same_clauses(rf.united()));
  const auto v = check_p3(rf.expressions(), g.expression, rf.background);
  CHECK_FALSE(v.pass);
}

TEST_CASE("condition implied by its own stakeholder fails P6") {
  const auto rf = support::load("implied_condition.rules");
  const auto g = ground(merge(rf));
  CHECK(g.expression.same_clauses(support::expr({"b -> a", "!a & !d -> !b", "!b -> !a"})));
  const auto v = check_p6(rf.expressions(), g.expression, rf.background);
  CHECK_FALSE(v.pass);
  REQUIRE_FALSE(v.witness.empty());
  CHECK(v.witness[0] == cl("!a & !d -> !b"));
}

TEST_CASE("sibling weakenings that entail each other trip the batch check") {
  const auto rf = support::load("siblings.rules");
  CHECK(check_preconditions(rf.united(), rf.background).ok());
  CHECK_THROWS_WITH_AS(merge(rf), doctest::Contains("not mutually coherent"), InternalInvariantViolation);
}

TEST_CASE("unsafe selection") {
  const auto rf = support::load("unsafe_order.rules");
  const auto safe = ground(merge(rf));
  const auto unsafe = ground(merge(rf, {.selection = PairSelection::AnyIncoherent}));
  CHECK_FALSE(safe.expression.same_clauses(unsafe.expression));
  CHECK(unsafe.expression.contains(cl("p & q -> s")));
  const auto violations = p6_violations(rf.expressions(), unsafe.expression, rf.background);
  CHECK(std::ranges::any_of(violations, [](const P6Violation& v) {
    return v.clause == cl("p & q -> s") && v.atom == support::at("q") && v.stakeholder == 1;
  }));
  CHECK(p6_violations(rf.expressions(), safe.expression, rf.background).empty());
}

TEST_CASE("merge is deterministic and preserves provenance") {
  std::mt19937_64 rng(31);
  int merged = 0;
  for (int i = 0; i < 400; ++i) {
    const auto rf = support::random_rule_file(rng);
    const auto a = merge(rf), b = merge(rf);
    CHECK(a.index() == b.index());
    if (const auto* g = std::get_if<Ground>(&a)) {
      ++merged;
      const auto& h = std::get<Ground>(b);
      CHECK(g->expression == h.expression);
      CHECK(g->trace.iterations.size() == h.trace.iterations.size());
      CHECK(is_coherent(g->expression, rf.background));
      const auto original = rf.united();
      for (const auto& c : g->expression.clauses()) CHECK_FALSE(g->expression.provenance(c).empty());
      for (const auto& it : g->trace.iterations) {
        CHECK(original.contains(it.replaced));
        CHECK_FALSE(it.added.empty());
        for (const auto& c : it.added) {
          CHECK(c.consequent() == it.replaced.consequent());
          CHECK(c.antecedent().size() == it.replaced.antecedent().size() + 1);
          for (Atom a : it.replaced.antecedent()) CHECK(c.in_antecedent(a));
        }
      }
      CHECK(g->trace.iterations.size() <= original.size());
    }
  }
  CHECK(merged > 50);
}
