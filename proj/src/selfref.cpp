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

#include "sxlab/selfref.hpp"

namespace sxlab {

namespace {

Formula provable(const Term& t) { return Formula::pred('P', t); }

Formula provable(const Code& c) { return Formula::pred('P', Term::numeral(c.value())); }

}  // namespace

Formula FitchConstruction::day_implication(std::uint32_t k) const {
  if (k < 1 || k > m) throw DomainError("day out of range");
  std::vector<Formula> parts{sentence};
  for (std::uint32_t j = 1; j < k; ++j)
    parts.push_back(Formula::negate(Formula::day(j)));
  return Formula::implies(conj_all(parts), Formula::day(k));
}

Env FitchConstruction::names() const {
  Env env;
  for (std::uint32_t k = 1; k <= m; ++k)
    env.bind_numeral("q" + std::to_string(k), day_codes[k - 1].value());
  env.bind_numeral("h", h.value());
  if (m == 2) {
    // The two step codes carry their customary names.
    env.bind_numeral("a", encode(day_implication(2)).value());
    env.bind_numeral("b", encode(day_implication(1)).value());
  } else {
    for (std::uint32_t k = 1; k <= m; ++k)
      env.bind_numeral("a" + std::to_string(k), encode(day_implication(k)).value());
  }
  env.bind_formula("S", sentence);
  return env;
}

FitchConstruction build_fitch(std::uint32_t m, Connective c) {
  if (m == 0) throw DomainError("a week has at least one day");
  if (c == Connective::Xor && m > 2)
    throw DomainError("exclusive-or announcement is only defined for m <= 2");

  FitchConstruction fc;
  fc.m = m;
  fc.connective = c;
  for (std::uint32_t k = 1; k <= m; ++k) fc.day_codes.push_back(encode(Formula::day(k)));

  std::vector<Term> open_terms;
  std::vector<Formula> disjuncts;
  Term prefix = Term::diag(Term::var(), Term::var());
  for (std::uint32_t k = 1; k <= m; ++k) {
    if (k > 1)
      prefix = Term::conj(prefix, Term::neg(Term::numeral(fc.day_codes[k - 2].value())));
    Term t = Term::imp(prefix, Term::numeral(fc.day_codes[k - 1].value()));
    disjuncts.push_back(Formula::conj(Formula::day(k), Formula::negate(provable(t))));
    open_terms.push_back(std::move(t));
  }
  fc.open_formula = chain(
      c == Connective::Xor ? FormulaKind::Xor : FormulaKind::Or, disjuncts);
  fc.h = encode(fc.open_formula);
  fc.sentence = substitute(fc.open_formula, fc.h.value());
  for (const Term& t : open_terms) fc.terms.push_back(substitute(t, fc.h.value()));
  return fc;
}

// Days are eliminated from the last one down. For day k the transcript
// proves A_k = (S & ~Q1 & ... & ~Q_{k-1}) -> Qk (a tautology once P[t_j] is
// available for every later day j), seals it with NEC into P[#A_k], and
// turns that into P[t_k] through EVAL. Every ~P[t_k] conjunct of S is then
// contradicted and ~S follows.
Proof derive_refutation(const FitchConstruction& fc) {
  const std::uint32_t m = fc.m;
  Proof p;
  std::vector<std::size_t> have(m + 1, 0);  // step proving P[t_k]

  for (std::uint32_t k = m; k >= 1; --k) {
    const Formula a = fc.day_implication(k);
    std::size_t id;
    if (k == m) {
      id = p.add(a, Rule::TAUT);
    } else {
      std::vector<Formula> later;
      for (std::uint32_t j = k + 1; j <= m; ++j) later.push_back(p.at(have[j]));
      id = p.add(curry(later, a), Rule::TAUT);
      for (std::uint32_t j = k + 1; j <= m; ++j)
        id = p.add(p.at(id).rhs(), Rule::MP, {id, have[j]});
    }

    const Code code = encode(a);
    const Formula by_code = provable(code);
    const Formula by_term = provable(fc.terms[k - 1]);
    const Proof witness = p;
    const std::size_t nec = p.add(by_code, Rule::NEC, {}, {witness});
    const std::size_t ev = p.add(Formula::iff(by_term, by_code), Rule::EVAL);
    const std::size_t flip = p.add(
        Formula::implies(p.at(ev), Formula::implies(by_code, by_term)), Rule::TAUT);
    const std::size_t back = p.add(p.at(flip).rhs(), Rule::MP, {flip, ev});
    have[k] = p.add(by_term, Rule::MP, {back, nec});
  }

  std::vector<Formula> all;
  for (std::uint32_t k = 1; k <= m; ++k) all.push_back(p.at(have[k]));
  std::size_t id = p.add(curry(all, Formula::negate(fc.sentence)), Rule::TAUT);
  for (std::uint32_t k = 1; k <= m; ++k)
    id = p.add(p.at(id).rhs(), Rule::MP, {id, have[k]});
  return p;
}

//------------------------------------------------------------------------------

KnowerConstruction build_knower() {
  KnowerConstruction kc;
  kc.open_formula =
      Formula::pred('K', Term::neg(Term::diag(Term::var(), Term::var())));
  kc.h = encode(kc.open_formula);
  kc.sentence = substitute(kc.open_formula, kc.h.value());
  return kc;
}

Env KnowerConstruction::names() const {
  Env env;
  env.bind_numeral("h", h.value());
  const Formula not_s = Formula::negate(sentence);
  const Code ns = encode(not_s);
  env.bind_numeral("ns", ns.value());
  env.bind_numeral(
      "a", encode(Formula::implies(Formula::pred('K', Term::numeral(ns.value())),
                                   not_s))
               .value());
  env.bind_formula("S", sentence);
  return env;
}

// S <-> K[#~S] by evaluation. The factivity instance K[#~S] -> ~S yields ~S
// outright; that little derivation is an explicit proof whose only
// non-logical step is the known schema instance, so K[#~S] is known, which
// by evaluation is S.
Proof derive_knower_contradiction(const KnowerConstruction& kc) {
  const Formula s = kc.sentence;
  const Formula not_s = Formula::negate(s);
  const Formula known_not_s = Formula::pred('K', Term::numeral(encode(not_s).value()));
  const Formula falsum = Formula::falsum();

  Proof p;
  const std::size_t a = p.add(Formula::implies(known_not_s, not_s), Rule::SCHEMA_A);
  const std::size_t ev = p.add(Formula::iff(s, known_not_s), Rule::EVAL);
  std::size_t t = p.add(
      Formula::implies(p.at(a), Formula::implies(p.at(ev), not_s)), Rule::TAUT);
  t = p.add(p.at(t).rhs(), Rule::MP, {t, a});
  const std::size_t ns = p.add(not_s, Rule::MP, {t, ev});
  const Proof witness = p;

  const std::size_t b = p.add(
      Formula::pred('K', Term::numeral(encode(p.at(a)).value())), Rule::AXIOM_B);
  const std::size_t kn = p.add(known_not_s, Rule::RULE_C, {b}, {witness});
  t = p.add(Formula::implies(p.at(ev), Formula::implies(known_not_s, s)),
            Rule::TAUT);
  t = p.add(p.at(t).rhs(), Rule::MP, {t, ev});
  const std::size_t ss = p.add(s, Rule::MP, {t, kn});
  t = p.add(Formula::implies(s, Formula::implies(not_s, falsum)), Rule::TAUT);
  t = p.add(p.at(t).rhs(), Rule::MP, {t, ss});
  p.add(falsum, Rule::MP, {t, ns});
  return p;
}

}  // namespace sxlab
