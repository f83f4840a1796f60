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

// Proof kernel. One checker serves the code-predicate systems (Fitch's
// provability system and the Knower system) and the epistemic system; a
// KernelConfig says which rules, predicate label, agents and hypotheses are
// in force.
//
// Rules:
//   HYP       conclusion is one of the declared hypotheses
//   TAUT      propositional tautology over opaque atoms (day atoms, code
//             predicate atoms keyed by their full term, knowledge formulas)
//   MP        from A -> B (first premise) and A (second premise), infer B
//   EVAL      L[t] <-> L[n] where the closed term t evaluates to n
//   NEC       L[n], one hypothesis-free sub-proof whose conclusion has code n
//   SCHEMA_A  K[n] -> Q where n is the code of Q
//   AXIOM_B   K[n] where n codes an instance of SCHEMA_A
//   RULE_C    K[n], one sub-proof of the formula coded by n using only
//             TAUT/MP/EVAL/SCHEMA_A; every SCHEMA_A instance Q it uses must be
//             matched by a cited premise K[#Q]
//   KE        axiom  Kx A -> A
//   KD_conj   axiom  Kx (A & B) -> Kx A  (or Kx B);  or from Kx (A & B) infer
//             Kx A (or Kx B)
//   KD_mp     axiom  Kx (A -> B) -> (Kx A -> Kx B);  or from Kx (A -> B) and
//             Kx A infer Kx B
//   KI        Kx A for any agent x, one hypothesis-free sub-proof of A

#ifndef SXLAB_KERNEL_HPP
#define SXLAB_KERNEL_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sxlab/formula.hpp"
#include "sxlab/proof.hpp"

namespace sxlab {

struct KernelConfig {
  std::set<Rule> rules;
  std::optional<char> pred_label;   // code predicate of the system, if any
  bool allow_know = false;
  std::vector<std::string> agents;  // checked when allow_know
  std::vector<Formula> hypotheses;
  std::uint32_t horizon = 0;        // largest admissible day, 0 = unbounded
  std::size_t max_atoms = 24;
};

struct CheckReport {
  bool accepted = true;
  std::vector<std::size_t> step;  // path to the first failing step, e.g. {9, 3}
  std::optional<Rule> rule;
  std::string message;

  /// "9.3" style location, empty when accepted.
  std::string location() const;
  std::string to_string() const;
};

CheckReport check(const Proof& p, const KernelConfig& cfg);

/// Truth-table check over opaque atoms. Throws DomainError when the atom
/// count exceeds max_atoms.
bool is_tautology(const Formula& f, std::size_t max_atoms = 24);

/// Number of distinct opaque atoms in f.
std::size_t atom_count(const Formula& f);

/// Rules actually applied anywhere in p, sub-proofs included.
std::set<Rule> rules_used(const Proof& p);

/// True when p or any sub-proof contains a HYP step.
bool uses_hypothesis(const Proof& p);

//------------------------------------------------------------------------------
// The code-predicate systems.

enum class SystemName { Fitch, Knower };

struct RuleSet {
  SystemName name = SystemName::Fitch;
  std::set<Rule> enabled;

  static RuleSet fitch();
  static RuleSet knower();

  RuleSet without(Rule r) const;
  KernelConfig config() const;
  std::string label() const;  // "fitch" / "knower"
};

CheckReport check(const Proof& p, const RuleSet& rs);

}  // namespace sxlab

#endif  // SXLAB_KERNEL_HPP
