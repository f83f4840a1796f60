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

// Self-referential constructions.
//
// Fitch's announcement for an m-day week is the closed instance S of
//
//   (Q1 & ~P[t_1]) op ... op (Qm & ~P[t_m]),
//   t_k = (D(x,x) Conj Neg q1 ... Conj Neg q_{k-1}) Imp q_k
//
// at x := h, where h is the code of the open formula itself and q_k the code
// of Qk. Because D(h,h) evaluates to the code of S, each t_k evaluates to the
// code of "(S & ~Q1 & ... & ~Q_{k-1}) -> Qk".
//
// The Knower sentence is S_K = K[Neg D(h_K,h_K)] with h_K the code of
// K[Neg D(x,x)]; its term evaluates to the code of ~S_K.

#ifndef SXLAB_SELFREF_HPP
#define SXLAB_SELFREF_HPP

#include <cstdint>
#include <vector>

#include "sxlab/formula.hpp"
#include "sxlab/godel.hpp"
#include "sxlab/kernel.hpp"
#include "sxlab/proof.hpp"

namespace sxlab {

enum class Connective { InclusiveOr, Xor };

struct FitchConstruction {
  std::uint32_t m = 0;
  Connective connective = Connective::InclusiveOr;
  Formula open_formula = Formula::falsum();
  Code h;
  Formula sentence = Formula::falsum();
  std::vector<Term> terms;          // t_1 .. t_m, closed (x := h)
  std::vector<Code> day_codes;      // q_1 .. q_m

  /// (S & ~Q1 & ... & ~Q_{k-1}) -> Qk, for 1 <= k <= m.
  Formula day_implication(std::uint32_t k) const;
  /// q1.., h, a1.. (a, b at m = 2) and S, for display.
  Env names() const;
};

/// Throws DomainError for m = 0 or xor with m > 2.
FitchConstruction build_fitch(std::uint32_t m, Connective c);

/// Kernel-accepted proof of ~S under the Fitch rules.
Proof derive_refutation(const FitchConstruction& fc);

struct KnowerConstruction {
  Code h;
  Formula open_formula = Formula::falsum();
  Formula sentence = Formula::falsum();  // S_K

  Env names() const;
};

KnowerConstruction build_knower();

/// Kernel-accepted proof of false under the Knower rules.
Proof derive_knower_contradiction(const KnowerConstruction& kc);

}  // namespace sxlab

#endif  // SXLAB_SELFREF_HPP
