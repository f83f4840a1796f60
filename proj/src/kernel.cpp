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

#include "sxlab/kernel.hpp"

#include <algorithm>
#include <unordered_map>

#include "sxlab/godel.hpp"

namespace sxlab {

//------------------------------------------------------------------------------
// Tautology checking

namespace {

enum class Op : std::uint8_t { Atom, False, Not, And, Or, Xor, Implies, Iff };

struct Node {
  Op op;
  int a = -1;
  int b = -1;
};

// Formula flattened into a node array over numbered atoms.
class Circuit {
 public:
  explicit Circuit(const Formula& f) { root_ = add(f); }

  std::size_t atoms() const { return atoms_.size(); }

  // Kleene evaluation: -1 unknown, 0 false, 1 true.
  int eval(const std::vector<int>& assign) const { return eval(root_, assign); }

 private:
  int add(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Falsum:
        return push({Op::False});
      case FormulaKind::Day:
      case FormulaKind::CodePred:
      case FormulaKind::Know: {
        auto [it, fresh] = index_.try_emplace(f, static_cast<int>(atoms_.size()));
        if (fresh) atoms_.push_back(f);
        return push({Op::Atom, it->second});
      }
      case FormulaKind::Not:
        return push({Op::Not, add(f.lhs())});
      default:
        break;
    }
    Op op = Op::And;
    switch (f.kind()) {
      case FormulaKind::And: op = Op::And; break;
      case FormulaKind::Or: op = Op::Or; break;
      case FormulaKind::Xor: op = Op::Xor; break;
      case FormulaKind::Implies: op = Op::Implies; break;
      case FormulaKind::Iff: op = Op::Iff; break;
      default: break;
    }
    const int l = add(f.lhs());
    const int r = add(f.rhs());
    return push({op, l, r});
  }

  int push(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int eval(int i, const std::vector<int>& as) const {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::Atom:
        return as[n.a];
      case Op::False:
        return 0;
      case Op::Not: {
        const int v = eval(n.a, as);
        return v < 0 ? -1 : 1 - v;
      }
      case Op::And: {
        const int x = eval(n.a, as);
        if (x == 0) return 0;
        const int y = eval(n.b, as);
        if (y == 0) return 0;
        return (x == 1 && y == 1) ? 1 : -1;
      }
      case Op::Or: {
        const int x = eval(n.a, as);
        if (x == 1) return 1;
        const int y = eval(n.b, as);
        if (y == 1) return 1;
        return (x == 0 && y == 0) ? 0 : -1;
      }
      case Op::Implies: {
        const int x = eval(n.a, as);
        if (x == 0) return 1;
        const int y = eval(n.b, as);
        if (y == 1) return 1;
        return (x == 1 && y == 0) ? 0 : -1;
      }
      case Op::Xor:
      case Op::Iff: {
        const int x = eval(n.a, as);
        if (x < 0) return -1;
        const int y = eval(n.b, as);
        if (y < 0) return -1;
        return (n.op == Op::Xor) == (x != y) ? 1 : 0;
      }
    }
    return -1;
  }

  std::vector<Node> nodes_;
  std::vector<Formula> atoms_;
  std::unordered_map<Formula, int, FormulaHash> index_;
  int root_ = -1;
};

// Walks the truth table in atom order, cutting a row range short as soon as
// the partial assignment already fixes the value.
bool all_rows_true(const Circuit& c, std::vector<int>& assign, std::size_t next) {
  const int v = c.eval(assign);
  if (v >= 0) return v == 1;
  if (next == assign.size()) return false;  // unreachable: full rows are 2-valued
  for (int bit : {0, 1}) {
    assign[next] = bit;
    if (!all_rows_true(c, assign, next + 1)) {
      assign[next] = -1;
      return false;
    }
  }
  assign[next] = -1;
  return true;
}

}  // namespace

std::size_t atom_count(const Formula& f) { return Circuit(f).atoms(); }

bool is_tautology(const Formula& f, std::size_t max_atoms) {
  const Circuit c(f);
  if (c.atoms() > max_atoms)
    throw DomainError("tautology check over " + std::to_string(c.atoms()) +
                      " atoms exceeds the limit of " + std::to_string(max_atoms));
  std::vector<int> assign(c.atoms(), -1);
  return all_rows_true(c, assign, 0);
}

//------------------------------------------------------------------------------

std::string CheckReport::location() const {
  std::string out;
  for (std::size_t i = 0; i < step.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(step[i]);
  }
  return out;
}

std::string CheckReport::to_string() const {
  if (accepted) return "accepted";
  std::string out = "rejected at step " + location();
  if (rule) out += " [" + std::string(rule_name(*rule)) + "]";
  return out + ": " + message;
}

std::set<Rule> rules_used(const Proof& p) {
  std::set<Rule> out;
  for (const Step& s : p.steps) {
    out.insert(s.rule);
    for (const Proof& sub : s.subproofs) {
      const std::set<Rule> inner = rules_used(sub);
      out.insert(inner.begin(), inner.end());
    }
  }
  return out;
}

bool uses_hypothesis(const Proof& p) {
  return std::any_of(p.steps.begin(), p.steps.end(), [](const Step& s) {
    return s.rule == Rule::HYP ||
           std::any_of(s.subproofs.begin(), s.subproofs.end(), uses_hypothesis);
  });
}

namespace {

struct Reject {
  std::string message;
};

bool is_numeral_pred(const Formula& f, char label) {
  return f.kind() == FormulaKind::CodePred && f.label() == label &&
         f.term().kind() == TermKind::Numeral;
}

void fragment(const Formula& f, const KernelConfig& cfg) {
  switch (f.kind()) {
    case FormulaKind::Day:
      if (cfg.horizon && f.day_index() > cfg.horizon)
        throw Reject{"day " + std::to_string(f.day_index()) +
                     " is beyond the horizon of " + std::to_string(cfg.horizon)};
      return;
    case FormulaKind::CodePred:
      if (!cfg.pred_label || *cfg.pred_label != f.label())
        throw Reject{std::string("code predicate ") + f.label() +
                     "[...] is not part of this system"};
      if (!f.term().closed()) throw Reject{"open term in a proof step"};
      return;
    case FormulaKind::Know:
      if (!cfg.allow_know)
        throw Reject{"knowledge operator outside the modal fragment"};
      if (!cfg.agents.empty() &&
          std::find(cfg.agents.begin(), cfg.agents.end(), f.agent()) ==
              cfg.agents.end())
        throw Reject{"unknown agent '" + f.agent() + "'"};
      fragment(f.lhs(), cfg);
      return;
    case FormulaKind::Not:
      fragment(f.lhs(), cfg);
      return;
    case FormulaKind::Falsum:
      return;
    default:
      fragment(f.lhs(), cfg);
      fragment(f.rhs(), cfg);
      return;
  }
}

class Checker {
 public:
  explicit Checker(const KernelConfig& cfg) : cfg_(cfg) {}

  CheckReport run(const Proof& p) {
    CheckReport r;
    if (p.steps.empty()) {
      r.accepted = false;
      r.message = "empty proof";
      return r;
    }
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      const Step& s = p.steps[i];
      try {
        step(p, i, s, r);
      } catch (const Reject& e) {
        r.accepted = false;
        r.message = e.message;
      }
      if (!r.accepted) {
        r.step.insert(r.step.begin(), i + 1);
        if (!r.rule) r.rule = s.rule;
        return r;
      }
    }
    return r;
  }

 private:
  char label() const {
    if (!cfg_.pred_label) throw Reject{"this system has no code predicate"};
    return *cfg_.pred_label;
  }

  const Formula& premise(const Proof& p, std::size_t i, const Step& s,
                         std::size_t k) const {
    const std::size_t id = s.premises[k];
    if (id == 0 || id > i)
      throw Reject{"premise " + std::to_string(id) + " does not point backwards"};
    return p.steps[id - 1].formula;
  }

  void arity(const Step& s, std::size_t premises, std::size_t subproofs) const {
    if (s.premises.size() != premises)
      throw Reject{"expects " + std::to_string(premises) + " premise(s), got " +
                   std::to_string(s.premises.size())};
    if (s.subproofs.size() != subproofs)
      throw Reject{"expects " + std::to_string(subproofs) + " sub-proof(s), got " +
                   std::to_string(s.subproofs.size())};
  }

  // Checks a sub-proof with the hypotheses withdrawn; failures propagate
  // with the sub-proof's step path.
  void sub(const Proof& sp, CheckReport& r) const {
    KernelConfig inner = cfg_;
    inner.hypotheses.clear();
    CheckReport sr = Checker(inner).run(sp);
    if (!sr.accepted) {
      r = std::move(sr);
      r.message = "in sub-proof: " + r.message;
    }
  }

  void step(const Proof& p, std::size_t i, const Step& s, CheckReport& r) {
    fragment(s.formula, cfg_);
    for (std::size_t k = 0; k < s.premises.size(); ++k) premise(p, i, s, k);
    if (!cfg_.rules.count(s.rule))
      throw Reject{"rule " + std::string(rule_name(s.rule)) +
                   " is not enabled"};
    const Formula& f = s.formula;
    switch (s.rule) {
      case Rule::HYP:
        arity(s, 0, 0);
        if (std::find(cfg_.hypotheses.begin(), cfg_.hypotheses.end(), f) ==
            cfg_.hypotheses.end())
          throw Reject{"not a declared hypothesis"};
        return;
      case Rule::TAUT:
        arity(s, 0, 0);
        try {
          if (!is_tautology(f, cfg_.max_atoms)) throw Reject{"not a tautology"};
        } catch (const DomainError& e) {
          throw Reject{e.what()};
        }
        return;
      case Rule::MP: {
        arity(s, 2, 0);
        const Formula& imp = premise(p, i, s, 0);
        const Formula& ant = premise(p, i, s, 1);
        if (imp.kind() != FormulaKind::Implies)
          throw Reject{"first premise is not an implication"};
        if (imp.lhs() != ant)
          throw Reject{"second premise does not match the antecedent"};
        if (imp.rhs() != f) throw Reject{"conclusion is not the consequent"};
        return;
      }
      case Rule::EVAL:
        arity(s, 0, 0);
        eval_step(f);
        return;
      case Rule::NEC: {
        arity(s, 0, 1);
        if (!is_numeral_pred(f, label()))
          throw Reject{"conclusion must be a code predicate of a numeral"};
        sub(s.subproofs[0], r);
        if (!r.accepted) return;
        if (encode(s.subproofs[0].conclusion()).value() != f.term().value())
          throw Reject{"numeral is not the code of the sub-proof's conclusion"};
        return;
      }
      case Rule::SCHEMA_A:
        arity(s, 0, 0);
        if (!schema_a(f)) throw Reject{"not an instance of K[#Q] -> Q"};
        return;
      case Rule::AXIOM_B: {
        arity(s, 0, 0);
        if (!is_numeral_pred(f, label()))
          throw Reject{"conclusion must be a code predicate of a numeral"};
        Formula coded = Formula::falsum();
        try {
          coded = decode(Code(f.term().value()));
        } catch (const DomainError&) {
          throw Reject{"numeral is not a formula code"};
        }
        if (!schema_a(coded))
          throw Reject{"numeral does not code an instance of K[#Q] -> Q"};
        return;
      }
      case Rule::RULE_C:
        rule_c(p, i, s, r);
        return;
      case Rule::KE:
        arity(s, 0, 0);
        if (f.kind() != FormulaKind::Implies ||
            f.lhs().kind() != FormulaKind::Know || f.lhs().lhs() != f.rhs())
          throw Reject{"not an instance of Kx A -> A"};
        return;
      case Rule::KD_conj:
        kd_conj(p, i, s);
        return;
      case Rule::KD_mp:
        kd_mp(p, i, s);
        return;
      case Rule::KI: {
        arity(s, 0, 1);
        if (f.kind() != FormulaKind::Know)
          throw Reject{"conclusion must be a knowledge formula"};
        if (uses_hypothesis(s.subproofs[0]))
          throw Reject{"sub-proof depends on a hypothesis"};
        sub(s.subproofs[0], r);
        if (!r.accepted) return;
        if (s.subproofs[0].conclusion() != f.lhs())
          throw Reject{"known formula is not the sub-proof's conclusion"};
        return;
      }
    }
  }

  void eval_step(const Formula& f) const {
    const char l = label();
    if (f.kind() != FormulaKind::Iff || f.lhs().kind() != FormulaKind::CodePred ||
        f.lhs().label() != l || !is_numeral_pred(f.rhs(), l))
      throw Reject{"conclusion must have the form L[t] <-> L[n]"};
    Code v;
    try {
      v = eval_term(f.lhs().term());
    } catch (const DomainError& e) {
      throw Reject{std::string("evaluation failed: ") + e.what()};
    }
    if (v.value() != f.rhs().term().value()) throw Reject{"evaluation mismatch"};
  }

  bool schema_a(const Formula& f) const {
    if (f.kind() != FormulaKind::Implies || !cfg_.pred_label ||
        !is_numeral_pred(f.lhs(), *cfg_.pred_label))
      return false;
    try {
      return encode(f.rhs()).value() == f.lhs().term().value();
    } catch (const DomainError&) {
      return false;
    }
  }

  void rule_c(const Proof& p, std::size_t i, const Step& s, CheckReport& r) {
    if (s.subproofs.size() != 1)
      throw Reject{"expects 1 sub-proof, got " + std::to_string(s.subproofs.size())};
    const Formula& f = s.formula;
    if (!is_numeral_pred(f, label()))
      throw Reject{"conclusion must be a code predicate of a numeral"};
    const Proof& sp = s.subproofs[0];
    for (Rule used : rules_used(sp))
      if (used != Rule::TAUT && used != Rule::MP && used != Rule::EVAL &&
          used != Rule::SCHEMA_A)
        throw Reject{"sub-proof uses " + std::string(rule_name(used)) +
                     "; only TAUT, MP, EVAL and SCHEMA_A are admitted"};
    sub(sp, r);
    if (!r.accepted) return;
    if (encode(sp.conclusion()).value() != f.term().value())
      throw Reject{"numeral is not the code of the sub-proof's conclusion"};
    for (const Step& inner : sp.steps) {
      if (inner.rule != Rule::SCHEMA_A) continue;
      const Formula known =
          Formula::pred(label(), Term::numeral(encode(inner.formula).value()));
      bool cited = false;
      for (std::size_t k = 0; k < s.premises.size(); ++k)
        cited = cited || premise(p, i, s, k) == known;
      if (!cited)
        throw Reject{"sub-proof uses an instance of K[#Q] -> Q whose code is "
                     "not cited as known"};
    }
  }

  void kd_conj(const Proof& p, std::size_t i, const Step& s) const {
    const Formula& f = s.formula;
    auto split_ok = [](const Formula& whole, const Formula& part) {
      return whole.kind() == FormulaKind::Know &&
             whole.lhs().kind() == FormulaKind::And &&
             part.kind() == FormulaKind::Know && part.agent() == whole.agent() &&
             (part.lhs() == whole.lhs().lhs() || part.lhs() == whole.lhs().rhs());
    };
    if (s.premises.empty()) {
      arity(s, 0, 0);
      if (f.kind() != FormulaKind::Implies || !split_ok(f.lhs(), f.rhs()))
        throw Reject{"not an instance of Kx (A & B) -> Kx A"};
      return;
    }
    arity(s, 1, 0);
    if (!split_ok(premise(p, i, s, 0), f))
      throw Reject{"conclusion is not a known conjunct of the premise"};
  }

  void kd_mp(const Proof& p, std::size_t i, const Step& s) const {
    const Formula& f = s.formula;
    auto fits = [](const Formula& kimp, const Formula& ka, const Formula& kb) {
      return kimp.kind() == FormulaKind::Know &&
             kimp.lhs().kind() == FormulaKind::Implies &&
             ka.kind() == FormulaKind::Know && kb.kind() == FormulaKind::Know &&
             ka.agent() == kimp.agent() && kb.agent() == kimp.agent() &&
             ka.lhs() == kimp.lhs().lhs() && kb.lhs() == kimp.lhs().rhs();
    };
    if (s.premises.empty()) {
      arity(s, 0, 0);
      if (f.kind() != FormulaKind::Implies ||
          f.rhs().kind() != FormulaKind::Implies ||
          !fits(f.lhs(), f.rhs().lhs(), f.rhs().rhs()))
        throw Reject{"not an instance of Kx (A -> B) -> (Kx A -> Kx B)"};
      return;
    }
    arity(s, 2, 0);
    if (!fits(premise(p, i, s, 0), premise(p, i, s, 1), f))
      throw Reject{"premises do not have the form Kx (A -> B), Kx A"};
  }

  const KernelConfig& cfg_;
};

}  // namespace

CheckReport check(const Proof& p, const KernelConfig& cfg) {
  return Checker(cfg).run(p);
}

//------------------------------------------------------------------------------

RuleSet RuleSet::fitch() {
  return {SystemName::Fitch, {Rule::TAUT, Rule::MP, Rule::EVAL, Rule::NEC}};
}

RuleSet RuleSet::knower() {
  return {SystemName::Knower,
          {Rule::TAUT, Rule::MP, Rule::EVAL, Rule::SCHEMA_A, Rule::AXIOM_B,
           Rule::RULE_C}};
}

RuleSet RuleSet::without(Rule r) const {
  RuleSet out = *this;
  out.enabled.erase(r);
  return out;
}

KernelConfig RuleSet::config() const {
  KernelConfig cfg;
  cfg.rules = enabled;
  cfg.pred_label = name == SystemName::Fitch ? 'P' : 'K';
  return cfg;
}

std::string RuleSet::label() const {
  return name == SystemName::Fitch ? "fitch" : "knower";
}

CheckReport check(const Proof& p, const RuleSet& rs) { return check(p, rs.config()); }

}  // namespace sxlab
