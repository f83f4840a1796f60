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

// Proofs are numbered linear transcripts. A step cites earlier steps of the
// same transcript by 1-based number and may embed whole sub-proofs (for
// rules such as NEC, KI and RULE_C whose side condition is "this formula
// has a proof").
//
// Text form, one step per line, sub-proofs indented two spaces:
//
//   sxlab-transcript 1
//   rules fitch
//   days q
//   let q1 = 20785
//   let S = (Q1 & ~P[D(h,h) Imp q1]) xor ...
//   1. (S & ~Q1) -> Q2 [TAUT]
//   2. P[a] [NEC {
//     1. (S & ~Q1) -> Q2 [TAUT]
//   }]
//   3. ... [MP 5,2]

#ifndef SXLAB_PROOF_HPP
#define SXLAB_PROOF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sxlab/formula.hpp"

namespace sxlab {

/// Malformed transcript file; the message carries the line or JSON path.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Rule {
  HYP,
  TAUT,
  MP,
  EVAL,
  NEC,
  SCHEMA_A,
  AXIOM_B,
  RULE_C,
  KD_conj,
  KD_mp,
  KI,
  KE,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct Proof;

struct Step {
  Formula formula;
  Rule rule;
  std::vector<std::size_t> premises;  // 1-based, strictly earlier
  std::vector<Proof> subproofs;

  bool operator==(const Step& o) const;
};

struct Proof {
  std::vector<Step> steps;

  /// Appends a step and returns its 1-based number.
  std::size_t add(Formula f, Rule r, std::vector<std::size_t> premises = {},
                  std::vector<Proof> subproofs = {});
  const Formula& conclusion() const;
  const Formula& at(std::size_t id) const { return steps.at(id - 1).formula; }
  bool empty() const { return steps.empty(); }

  bool operator==(const Proof& o) const { return steps == o.steps; }
};

/// The steps step `id` depends on (through premises), renumbered, ending in
/// step `id`. Sub-proofs are kept whole.
Proof extract(const Proof& p, std::size_t id);

/// Description of the epistemic system a transcript was produced under.
struct SystemRecord {
  std::uint32_t m = 0;
  std::vector<std::string> agents;
  std::vector<std::string> rules;

  bool operator==(const SystemRecord& o) const = default;
};

/// A proof together with what is needed to read and re-check it.
struct Transcript {
  std::string rules;  // "fitch", "knower" or "epistemic"
  DayStyle days = DayStyle::Q;
  std::optional<SystemRecord> system;
  Env names;
  Proof proof;
};

/// Large numeral bindings are abbreviated unless full_codes; such text
/// cannot be read back.
std::string to_text(const Transcript& t, bool full_codes = true);
Transcript transcript_from_text(std::string_view text);

std::string to_json(const Transcript& t);
Transcript transcript_from_json(std::string_view text);

/// Accepts either form.
Transcript load_transcript(std::string_view text);

inline constexpr int kFormatVersion = 1;

}  // namespace sxlab

#endif  // SXLAB_PROOF_HPP
