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

// Reports behind the command-line tool. Every proof is run through the
// kernel before it is rendered; a rejection there is an internal error.

#ifndef SXLAB_RENDER_HPP
#define SXLAB_RENDER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sxlab/epistemic.hpp"
#include "sxlab/games.hpp"
#include "sxlab/selfref.hpp"

namespace sxlab {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad option combination (e.g. CSV for a proof).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; throws UsageError otherwise.
Format format_from_name(std::string_view name);

struct RenderOptions {
  Format format = Format::Text;
  bool full_codes = false;  // text only; JSON always carries full codes
};

std::string render_fitch(std::uint32_t m, Connective c, const RenderOptions& o);
/// With lemma_only the elimination lemma is rendered instead of the
/// contradiction (text); JSON always carries both.
std::string render_epistemic(const EpistemicSystem& sys, bool lemma_only,
                             const RenderOptions& o);
std::string render_knower(const RenderOptions& o);
std::string render_ipd(std::uint32_t n, const PayoffMatrix& pm, const RenderOptions& o);
std::string render_surprise(std::uint32_t m, bool oracle, const RenderOptions& o);

struct CheckRequest {
  std::optional<std::string> rules;       // overrides the transcript's own
  std::optional<EpistemicSystem> system;  // overrides the transcript's own
};

struct CheckOutcome {
  bool accepted = true;
  std::string report;  // one line per transcript checked
};

/// Checks a text transcript, a JSON transcript, or a JSON report with
/// embedded transcripts. Throws FormatError on unreadable input and
/// UsageError when no rule set can be determined.
CheckOutcome check_document(std::string_view text, const CheckRequest& req = {});

/// Writes the golden set into dir (created if missing). Throws IoError.
void write_goldens(const std::string& dir);

}  // namespace sxlab

#endif  // SXLAB_RENDER_HPP
