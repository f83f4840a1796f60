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

#include "sxlab/epistemic.hpp"

#include <algorithm>
#include <cctype>

namespace sxlab {

namespace {

const std::vector<std::string>& student_names() {
  static const std::vector<std::string> names{"Art", "Bob", "Carl", "Don", "Eric"};
  return names;
}

const std::set<Rule>& modal_rules() {
  static const std::set<Rule> rules{Rule::KD_conj, Rule::KD_mp, Rule::KI, Rule::KE,
                                    Rule::HYP};
  return rules;
}

bool valid_agent(const std::string& a) {
  return !a.empty() && std::all_of(a.begin(), a.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

Formula no(std::uint32_t k) { return Formula::negate(Formula::day(k)); }

// c_k
Formula day_clause(const EpistemicSystem& sys, std::uint32_t k) {
  std::vector<Formula> parts{Formula::negate(sys.know(k, Formula::day(k)))};
  for (std::uint32_t j = 1; j < k; ++j) parts.push_back(sys.know(k, no(j)));
  return Formula::implies(Formula::day(k), conj_all(parts));
}

Formula some_day(std::uint32_t m) {
  std::vector<Formula> days;
  for (std::uint32_t k = 1; k <= m; ++k) days.push_back(Formula::day(k));
  return chain(FormulaKind::Or, days);
}

// ~m & ~(m-1) & ... & ~l
Formula none_from(std::uint32_t l, std::uint32_t m) {
  std::vector<Formula> parts;
  for (std::uint32_t k = m; k >= l; --k) parts.push_back(no(k));
  return conj_all(parts);
}

class Builder {
 public:
  explicit Builder(const EpistemicSystem& sys) : sys_(sys) {}

  Proof& proof() { return p_; }
  const Formula& at(std::size_t id) const { return p_.at(id); }

  std::size_t add(Formula f, Rule r, std::vector<std::size_t> premises = {},
                  std::vector<Proof> subs = {}) {
    return p_.add(std::move(f), r, std::move(premises), std::move(subs));
  }

  std::size_t mp(std::size_t imp, std::size_t ant) {
    return add(at(imp).rhs(), Rule::MP, {imp, ant});
  }

  // TAUT f_1 -> ... -> f_n -> c, then detach each f_i.
  std::size_t taut_mp(const std::vector<std::size_t>& ids, Formula c) {
    std::vector<Formula> fs;
    for (std::size_t id : ids) fs.push_back(at(id));
    std::size_t t = add(curry(fs, std::move(c)), Rule::TAUT);
    for (std::size_t id : ids) t = mp(t, id);
    return t;
  }

  // X -> Y, Y -> Z  =>  X -> Z
  std::size_t chain2(std::size_t xy, std::size_t yz) {
    return taut_mp({xy, yz}, Formula::implies(at(xy).lhs(), at(yz).rhs()));
  }

  std::size_t ki(std::uint32_t day, std::size_t id) {
    return add(sys_.know(day, at(id)), Rule::KI, {}, {extract(p_, id)});
  }

  std::size_t kd_mp_axiom(const Formula& known_imp) {
    const std::string& a = known_imp.agent();
    const Formula& body = known_imp.lhs();
    return add(Formula::implies(known_imp,
                                Formula::implies(Formula::know(a, body.lhs()),
                                                 Formula::know(a, body.rhs()))),
               Rule::KD_mp);
  }

  std::size_t kd_conj_axiom(const Formula& known_conj, bool left) {
    const Formula& body = known_conj.lhs();
    return add(Formula::implies(known_conj,
                                Formula::know(known_conj.agent(),
                                              left ? body.lhs() : body.rhs())),
               Rule::KD_conj);
  }

  // theorem X -> Y  =>  K X -> K Y
  std::size_t lift(std::uint32_t day, std::size_t id) {
    const std::size_t k = ki(day, id);
    return mp(kd_mp_axiom(at(k)), k);
  }

  // B -> K y  =>  B -> y
  std::size_t factive(std::size_t id) {
    const Formula& ky = at(id).rhs();
    return chain2(id, add(Formula::implies(ky, ky.lhs()), Rule::KE));
  }

 private:
  const EpistemicSystem& sys_;
  Proof p_;
};

struct Derivation {
  Proof proof;
  std::size_t lemma = 0;  // step of K_m A -> ~m
};

// Works down the tower B_l = K_l B_{l+1}, B_m = K_m A. Level l proves
// B_l -> K_l psi and B_l -> psi for psi in {D, c_1..c_l}, then
// E_l: B_l -> ~m & ... & ~l. At the bottom D and E_1 clash.
Derivation tower_derivation(const EpistemicSystem& sys) {
  const std::uint32_t m = sys.m;
  const Formula a = build_announcement(sys).formula;
  const Formula d = some_day(m);
  std::vector<Formula> clause(m + 1, Formula::falsum());
  for (std::uint32_t k = 1; k <= m; ++k) clause[k] = day_clause(sys, k);

  std::vector<Formula> tower(m + 2, a);
  for (std::uint32_t l = m; l >= 1; --l) tower[l] = sys.know(l, tower[l + 1]);

  Builder b(sys);
  Derivation out;
  // truth[0] is D, truth[i] is c_i; theorems of the level above.
  std::vector<std::size_t> truth;
  std::size_t elim = 0;

  for (std::uint32_t l = m; l >= 1; --l) {
    const Formula& top = tower[l];
    std::vector<std::size_t> know(l + 1, 0);
    if (l == m) {
      know[0] = b.kd_conj_axiom(top, false);
      std::size_t cur = b.kd_conj_axiom(top, true);  // K A -> K X_m
      for (std::uint32_t i = m; i >= 1; --i) {
        if (i == 1) {
          know[1] = cur;
          break;
        }
        const Formula& kx = b.at(cur).rhs();
        know[i] = b.chain2(cur, b.kd_conj_axiom(kx, false));
        cur = b.chain2(cur, b.kd_conj_axiom(kx, true));
      }
    } else {
      for (std::uint32_t i = 0; i <= l; ++i) know[i] = b.lift(l, truth[i]);
    }
    std::vector<std::size_t> here(l + 1, 0);
    for (std::uint32_t i = 0; i <= l; ++i) here[i] = b.factive(know[i]);

    std::size_t know_rest = 0;
    std::size_t rest = 0;
    if (l < m) {
      know_rest = b.lift(l, elim);
      rest = b.factive(know_rest);
    }

    // K_l of: D -> [rest ->] ~1 -> ... -> ~(l-1) -> l
    std::vector<Formula> ants{d};
    if (l < m) ants.push_back(none_from(l + 1, m));
    for (std::uint32_t j = 1; j < l; ++j) ants.push_back(no(j));
    const std::size_t tau = b.add(curry(ants, Formula::day(l)), Rule::TAUT);
    const std::size_t ktau = b.ki(l, tau);

    std::size_t cur = b.chain2(know[0], b.mp(b.kd_mp_axiom(b.at(ktau)), ktau));
    if (l < m) {
      const std::size_t ax = b.kd_mp_axiom(b.at(cur).rhs());
      cur = b.taut_mp({cur, ax, know_rest},
                      Formula::implies(top, b.at(ax).rhs().rhs()));
    }
    std::vector<std::size_t> ids{cur};
    Formula known = b.at(cur).rhs();
    for (std::uint32_t j = 1; j < l; ++j) {
      const std::size_t ax = b.kd_mp_axiom(known);
      ids.push_back(ax);
      known = b.at(ax).rhs().rhs();
    }
    ids.push_back(here[l]);
    std::size_t e = b.taut_mp(ids, Formula::implies(top, no(l)));
    if (l < m) e = b.taut_mp({e, rest}, Formula::implies(top, none_from(l, m)));
    if (l == m) out.lemma = e;

    elim = e;
    truth.assign(here.begin(), here.end());
  }

  const std::size_t clash =
      b.taut_mp({truth[0], elim}, Formula::implies(tower[1], Formula::falsum()));
  const std::size_t hyp = b.add(tower[1], Rule::HYP);
  b.mp(clash, hyp);
  out.proof = std::move(b.proof());
  return out;
}

// One day: K1 A gives A by KE and K1 1 by KD, and A says ~K1 1.
Proof moore_derivation(const EpistemicSystem& sys) {
  const Formula a = build_announcement(sys).formula;
  const Formula ka = sys.know(1, a);
  const Formula k1 = sys.know(1, Formula::day(1));
  Proof p;
  const std::size_t hyp = p.add(ka, Rule::HYP);
  const std::size_t ke = p.add(Formula::implies(ka, a), Rule::KE);
  const std::size_t aa = p.add(a, Rule::MP, {ke, hyp});
  const std::size_t kd = p.add(k1, Rule::KD_conj, {hyp});
  std::size_t t = p.add(Formula::implies(a, Formula::implies(k1, Formula::falsum())),
                        Rule::TAUT);
  t = p.add(p.at(t).rhs(), Rule::MP, {t, aa});
  p.add(Formula::falsum(), Rule::MP, {t, kd});
  return p;
}

}  // namespace

EpistemicSystem EpistemicSystem::days(std::uint32_t m) {
  if (m == 0) throw DomainError("a week has at least one day");
  std::vector<std::string> agents;
  if (m == 2) {
    agents = {"a", "b"};
  } else {
    for (std::uint32_t k = 1; k <= m; ++k) agents.push_back(std::to_string(k));
  }
  return with_agents(m, std::move(agents));
}

EpistemicSystem EpistemicSystem::students(std::uint32_t m) {
  if (m == 0 || m > student_names().size())
    throw DomainError("the student preset covers 1 to 5 days");
  return with_agents(m, {student_names().begin(), student_names().begin() + m});
}

EpistemicSystem EpistemicSystem::with_agents(std::uint32_t m,
                                             std::vector<std::string> agents) {
  if (m == 0) throw DomainError("a week has at least one day");
  if (agents.size() != m)
    throw DomainError("expected " + std::to_string(m) + " agents, got " +
                      std::to_string(agents.size()));
  std::set<std::string> seen;
  for (const std::string& a : agents) {
    if (!valid_agent(a)) throw DomainError("malformed agent id '" + a + "'");
    if (!seen.insert(a).second) throw DomainError("duplicate agent id '" + a + "'");
  }
  EpistemicSystem sys;
  sys.m = m;
  sys.agents = std::move(agents);
  sys.enabled = modal_rules();
  return sys;
}

EpistemicSystem EpistemicSystem::from_record(const SystemRecord& r) {
  EpistemicSystem sys = with_agents(r.m, r.agents);
  sys.enabled.clear();
  for (const std::string& name : r.rules) {
    const auto rule = rule_from_name(name);
    if (!rule || !modal_rules().count(*rule))
      throw DomainError("rule '" + name + "' is not an epistemic rule");
    sys.enabled.insert(*rule);
  }
  return sys;
}

EpistemicSystem EpistemicSystem::without(Rule r) const {
  EpistemicSystem out = *this;
  out.enabled.erase(r);
  return out;
}

SystemRecord EpistemicSystem::record() const {
  SystemRecord r;
  r.m = m;
  r.agents = agents;
  for (Rule rule : enabled) r.rules.emplace_back(rule_name(rule));
  return r;
}

Formula EpistemicSystem::know(std::uint32_t day, const Formula& body) const {
  if (day < 1 || day > m) throw DomainError("day out of range");
  return Formula::know(agents[day - 1], body);
}

Formula EpistemicSystem::tower() const {
  Formula f = build_announcement(*this).formula;
  for (std::uint32_t k = m; k >= 1; --k) f = know(k, f);
  return f;
}

KernelConfig EpistemicSystem::config() const {
  KernelConfig cfg;
  cfg.rules = enabled;
  cfg.rules.insert(Rule::TAUT);
  cfg.rules.insert(Rule::MP);
  cfg.allow_know = true;
  cfg.agents = agents;
  cfg.hypotheses = {tower()};
  cfg.horizon = m;
  return cfg;
}

Announcement build_announcement(const EpistemicSystem& sys) {
  if (sys.m == 0) throw DomainError("a week has at least one day");
  std::vector<Formula> parts;
  for (std::uint32_t k = 1; k <= sys.m; ++k) parts.push_back(day_clause(sys, k));
  parts.push_back(some_day(sys.m));
  return {sys.m, conj_all(parts)};
}

CheckReport check(const Proof& p, const EpistemicSystem& sys) {
  return check(p, sys.config());
}

Proof derive_elimination_lemma(const EpistemicSystem& sys) {
  if (sys.m < 2) throw DomainError("the elimination lemma needs at least two days");
  Derivation d = tower_derivation(sys);
  return extract(d.proof, d.lemma);
}

Proof derive_contradiction(const EpistemicSystem& sys) {
  if (sys.m == 0) throw DomainError("a week has at least one day");
  if (sys.m == 1) return moore_derivation(sys);
  return tower_derivation(sys).proof;
}

Env announcement_names(const EpistemicSystem& sys) {
  Env env;
  env.bind_formula("A", build_announcement(sys).formula);
  return env;
}

Formula relabel(const Formula& f, const std::map<std::string, std::string>& map) {
  switch (f.kind()) {
    case FormulaKind::Falsum:
    case FormulaKind::Day:
    case FormulaKind::CodePred:
      return f;
    case FormulaKind::Know: {
      const auto it = map.find(f.agent());
      return Formula::know(it == map.end() ? f.agent() : it->second,
                           relabel(f.lhs(), map));
    }
    case FormulaKind::Not:
      return Formula::negate(relabel(f.lhs(), map));
    default:
      return Formula::binary(f.kind(), relabel(f.lhs(), map), relabel(f.rhs(), map));
  }
}

Proof relabel(const Proof& p, const std::map<std::string, std::string>& map) {
  Proof out;
  for (const Step& s : p.steps) {
    std::vector<Proof> subs;
    for (const Proof& sp : s.subproofs) subs.push_back(relabel(sp, map));
    out.add(relabel(s.formula, map), s.rule, s.premises, std::move(subs));
  }
  return out;
}

}  // namespace sxlab
