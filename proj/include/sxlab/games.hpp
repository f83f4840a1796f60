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

// Finitely repeated prisoner's dilemma.
//
// A history is the sequence of joint actions played so far. Histories are
// numbered by length and then lexicographically, each joint action being the
// base-4 digit 2*a1 + a2 with Cooperate = 0, Defect = 1; the empty history is
// number 0.

#ifndef SXLAB_GAMES_HPP
#define SXLAB_GAMES_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sxlab {

enum class Action : std::uint8_t { Cooperate = 0, Defect = 1 };

char action_letter(Action a);  // 'C' / 'D'

using Payoff = mpq_class;
using PayoffPair = std::pair<Payoff, Payoff>;

struct PayoffMatrix {
  Payoff T{2}, R{1}, P{0}, S{-2};

  /// Throws DomainError("not a prisoner's dilemma") unless T > R > P > S.
  void validate() const;
  /// Stage payoffs for (row, column).
  PayoffPair stage(Action a1, Action a2) const;
  /// "T,R,P,S" with integer, fraction or decimal entries.
  static PayoffMatrix parse(std::string_view text);
  std::string to_string() const;
};

/// Exact rational from "3", "-2", "3/4" or "1.25".
Payoff parse_rational(std::string_view text);

using JointAction = std::pair<Action, Action>;
using History = std::vector<JointAction>;

/// Number of histories of length < n.
std::uint64_t history_count(std::uint32_t n);
std::uint64_t history_index(const History& h);
History history_at(std::uint64_t index);
std::string history_string(const History& h);  // "CD,DD"; empty -> "-"

struct StrategyProfile {
  std::uint32_t n = 0;
  std::array<std::vector<Action>, 2> moves;  // indexed by history number

  static StrategyProfile uniform(std::uint32_t n, Action a1, Action a2);
  Action move(int player, const History& h) const;
  /// Joint actions along the play path.
  History path() const;
  bool all_defect() const;
};

PayoffPair payoff_of(const StrategyProfile& profile, const PayoffMatrix& pm);

struct SpeResult {
  StrategyProfile profile;
  PayoffPair value;
};

/// Backward induction, each node solved as its continuation-augmented stage
/// game. Throws DomainError for n = 0, n > 10 or an invalid matrix.
SpeResult solve_spe(std::uint32_t n, const PayoffMatrix& pm);

struct Equilibrium {
  StrategyProfile profile;
  History path;
  PayoffPair value;
};

/// All pure Nash equilibria, ordered by the two strategies' bit patterns.
/// Throws DomainError unless n is 1 or 2.
std::vector<Equilibrium> enumerate_pure_nash(std::uint32_t n, const PayoffMatrix& pm);

}  // namespace sxlab

#endif  // SXLAB_GAMES_HPP
