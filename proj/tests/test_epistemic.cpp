/* Copyright 2026 The sxlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <map>
#include <string>

#include "doctest.h"
#include "sxlab/epistemic.hpp"
#include "sxlab/kernel.hpp"

using namespace sxlab;

namespace {

bool hyp_in_ki(const Proof& p) {
  for (const Step& s : p.steps)
    for (const Proof& sp : s.subproofs) {
      if (s.rule == Rule::KI && uses_hypothesis(sp)) return true;
      if (hyp_in_ki(sp)) return true;
    }
  return false;
}

bool has_conjunct(const Formula& f, const Formula& part) {
  if (f == part) return true;
  if (f.kind() == FormulaKind::And || f.kind() == FormulaKind::Implies)
    return has_conjunct(f.lhs(), part) || has_conjunct(f.rhs(), part);
  return false;
}

}  // namespace

TEST_CASE("announcement text") {
  CHECK(print(build_announcement(EpistemicSystem::days(2)).formula,
              PrintOptions{nullptr, DayStyle::Bare}) ==
        "(1 -> ~Ka 1) & (2 -> (~Kb 2 & Kb ~1)) & (1 | 2)");
  CHECK(print(build_announcement(EpistemicSystem::days(1)).formula,
              PrintOptions{nullptr, DayStyle::Bare}) == "(1 -> ~K1 1) & 1");
  const Formula a3 = build_announcement(EpistemicSystem::days(3)).formula;
  CHECK(has_conjunct(a3, parse("K3 ~1")));
  CHECK(has_conjunct(a3, parse("K3 ~2")));
  CHECK_FALSE(has_conjunct(a3, parse("K2 ~2")));
}

TEST_CASE("agent sets") {
  CHECK(EpistemicSystem::days(2).agents == std::vector<std::string>{"a", "b"});
  CHECK(EpistemicSystem::days(3).agents == std::vector<std::string>{"1", "2", "3"});
  CHECK(EpistemicSystem::students(5).agents ==
        std::vector<std::string>{"Art", "Bob", "Carl", "Don", "Eric"});
  CHECK_THROWS_AS(EpistemicSystem::with_agents(2, {"a"}), DomainError);
  CHECK_THROWS_AS(EpistemicSystem::with_agents(2, {"a", "a"}), DomainError);
  CHECK_THROWS_AS(EpistemicSystem::with_agents(2, {"a", "b c"}), DomainError);
  CHECK_THROWS_AS(EpistemicSystem::days(0), DomainError);
  const EpistemicSystem s = EpistemicSystem::students(3);
  CHECK(EpistemicSystem::from_record(s.record()).agents == s.agents);
}

TEST_CASE("contradiction from the tower, m = 1..5") {
  for (std::uint32_t m = 1; m <= 5; ++m) {
    INFO("m=" << m);
    const EpistemicSystem sys = EpistemicSystem::days(m);
    const Proof p = derive_contradiction(sys);
    CHECK(check(p, sys).accepted);
    CHECK(p.conclusion() == Formula::falsum());
    CHECK_FALSE(hyp_in_ki(p));
    for (Rule r : {Rule::KD_conj, Rule::KD_mp, Rule::KI, Rule::KE}) {
      if (!rules_used(p).count(r)) continue;
      const CheckReport rep = check(p, sys.without(r));
      CHECK_FALSE(rep.accepted);
      CHECK(rep.rule == r);
    }
  }
}

TEST_CASE("each epistemic rule is needed") {
  const Proof p = derive_contradiction(EpistemicSystem::days(3));
  const std::set<Rule> used = rules_used(p);
  for (Rule r : {Rule::KD_conj, Rule::KD_mp, Rule::KI, Rule::KE}) CHECK(used.count(r) == 1);
  const Proof one = derive_contradiction(EpistemicSystem::days(1));
  CHECK(one.steps.size() == 7);
  CHECK_FALSE(check(one, EpistemicSystem::days(1).without(Rule::KE)).accepted);
}

TEST_CASE("a checked proof is not accepted under the wrong agents") {
  const Proof p = derive_contradiction(EpistemicSystem::days(2));
  CHECK_FALSE(check(p, EpistemicSystem::with_agents(2, {"x", "y"})).accepted);
  CHECK_FALSE(check(p, EpistemicSystem::days(3)).accepted);
}

TEST_CASE("relabelling the students is an isomorphism") {
  const EpistemicSystem days = EpistemicSystem::days(5);
  const EpistemicSystem students = EpistemicSystem::students(5);
  const std::map<std::string, std::string> map{
      {"1", "Art"}, {"2", "Bob"}, {"3", "Carl"}, {"4", "Don"}, {"5", "Eric"}};
  const Proof p = derive_contradiction(days);
  const Proof q = derive_contradiction(students);
  CHECK(relabel(p, map) == q);
  CHECK(relabel(build_announcement(days).formula, map) == build_announcement(students).formula);
  CHECK(check(relabel(p, map), students).accepted);
}

TEST_CASE("elimination lemma") {
  CHECK_THROWS_AS(derive_elimination_lemma(EpistemicSystem::days(1)), DomainError);
  for (std::uint32_t m = 2; m <= 5; ++m) {
    const EpistemicSystem sys = EpistemicSystem::days(m);
    const Proof l = derive_elimination_lemma(sys);
    const Formula a = build_announcement(sys).formula;
    CHECK(l.conclusion() ==
          Formula::implies(sys.know(m, a), Formula::negate(Formula::day(m))));
    CHECK(check(l, sys).accepted);
    CHECK_FALSE(uses_hypothesis(l));
  }
  const EpistemicSystem two = EpistemicSystem::days(2);
  const Proof l = derive_elimination_lemma(two);
  const Env env = announcement_names(two);
  CHECK(print(l.conclusion(), PrintOptions{&env, DayStyle::Bare}) == "Kb A -> ~2");
}

TEST_CASE("lemma round-trips through both transcript formats") {
  const EpistemicSystem sys = EpistemicSystem::days(3);
  Transcript t;
  t.rules = "epistemic";
  t.days = DayStyle::Bare;
  t.system = sys.record();
  t.names = announcement_names(sys);
  t.proof = derive_elimination_lemma(sys);
  const Transcript a = transcript_from_text(to_text(t));
  const Transcript b = transcript_from_json(to_json(t));
  CHECK(a.proof == t.proof);
  CHECK(b.proof == t.proof);
  CHECK(a.system == t.system);
  CHECK(b.system == t.system);
  CHECK(to_text(a) == to_text(t));
}
