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

// Epistemic reading of the announcement. For an m-day week with agent k
// being the class on the eve of day k, the announcement is
//
//   c_1 & ... & c_m & (1 | ... | m),
//   c_k = k -> (~K_k k & K_k ~1 & ... & K_k ~(k-1))
//
// and the knowledge tower K_1 K_2 ... K_m A is inconsistent under KD, KI and
// KE.

#ifndef SXLAB_EPISTEMIC_HPP
#define SXLAB_EPISTEMIC_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sxlab/formula.hpp"
#include "sxlab/kernel.hpp"
#include "sxlab/proof.hpp"

namespace sxlab {

struct EpistemicSystem {
  std::uint32_t m = 0;
  std::vector<std::string> agents;  // agents[k-1] knows on the eve of day k
  std::set<Rule> enabled;           // drawn from KD_conj, KD_mp, KI, KE, HYP

  /// Agents a, b for two days and 1..m otherwise; all rules enabled.
  static EpistemicSystem days(std::uint32_t m);
  /// The first m of Art, Bob, Carl, Don, Eric.
  static EpistemicSystem students(std::uint32_t m = 5);
  /// Throws DomainError on a wrong count, duplicate or malformed id.
  static EpistemicSystem with_agents(std::uint32_t m, std::vector<std::string> agents);
  static EpistemicSystem from_record(const SystemRecord& r);

  EpistemicSystem without(Rule r) const;
  SystemRecord record() const;

  Formula know(std::uint32_t day, const Formula& body) const;
  /// K_1 K_2 ... K_m A, the one hypothesis of the system.
  Formula tower() const;
  KernelConfig config() const;
};

struct Announcement {
  std::uint32_t m = 0;
  Formula formula = Formula::falsum();
};

Announcement build_announcement(const EpistemicSystem& sys);

CheckReport check(const Proof& p, const EpistemicSystem& sys);

/// K_m A -> ~m, from no hypotheses. Throws DomainError for m = 1.
Proof derive_elimination_lemma(const EpistemicSystem& sys);

/// false, from the tower hypothesis.
Proof derive_contradiction(const EpistemicSystem& sys);

/// Binds A to the announcement, for display.
Env announcement_names(const EpistemicSystem& sys);

/// Renames agents throughout; unmapped agents are kept.
Formula relabel(const Formula& f, const std::map<std::string, std::string>& map);
Proof relabel(const Proof& p, const std::map<std::string, std::string>& map);

}  // namespace sxlab

#endif  // SXLAB_EPISTEMIC_HPP
