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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sxlab/render.hpp"

using namespace sxlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool is_proof_file(const fs::path& p) {
  const std::string stem = p.stem().string();
  return stem.rfind("fitch", 0) == 0 || stem.rfind("epistemic", 0) == 0 ||
         stem.rfind("knower", 0) == 0;
}

}  // namespace

TEST_CASE("goldens are reproduced byte for byte") {
  const fs::path fresh = fs::temp_directory_path() / "sxlab_goldens_test";
  fs::remove_all(fresh);
  write_goldens(fresh.string());
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(SXLAB_GOLDEN_DIR)) {
    INFO(e.path().filename().string());
    REQUIRE(fs::exists(fresh / e.path().filename()));
    CHECK(slurp(e.path()) == slurp(fresh / e.path().filename()));
    ++n;
  }
  CHECK(n == 42);
  std::size_t produced = 0;
  for (const auto& e : fs::directory_iterator(fresh)) produced += e.is_regular_file();
  CHECK(produced == n);
  fs::remove_all(fresh);
}

TEST_CASE("every golden proof re-checks") {
  for (const auto& e : fs::directory_iterator(SXLAB_GOLDEN_DIR)) {
    if (!is_proof_file(e.path())) continue;
    INFO(e.path().filename().string());
    const CheckOutcome o = check_document(slurp(e.path()));
    CHECK(o.accepted);
  }
}

TEST_CASE("a tampered transcript is rejected at the altered step") {
  std::string text = render_fitch(2, Connective::Xor, {Format::Text, true});
  const std::string from = "8. S -> Q1 [MP 7,6]";
  const std::size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), "8. S -> Q2 [MP 7,6]");
  const CheckOutcome o = check_document(text);
  CHECK_FALSE(o.accepted);
  CHECK(o.report.find("step 8 [MP]") != std::string::npos);
}

TEST_CASE("rule overrides on re-check") {
  const std::string fitch = render_fitch(1, Connective::InclusiveOr, {Format::Json, true});
  CHECK(check_document(fitch).accepted);
  CHECK_FALSE(check_document(fitch, CheckRequest{std::string("knower"), std::nullopt}).accepted);
  const std::string ep = render_epistemic(EpistemicSystem::days(3), false, {Format::Json, true});
  CHECK(check_document(ep).accepted);
  CHECK_FALSE(
      check_document(ep, CheckRequest{std::nullopt, EpistemicSystem::days(3).without(Rule::KI)})
          .accepted);
  CHECK_THROWS_AS(check_document("sxlab-transcript 1\n1. Q1 -> Q1 [TAUT]\n"), UsageError);
  CHECK_THROWS_AS(check_document("not a transcript"), FormatError);
}

TEST_CASE("report shapes") {
  using ojson = nlohmann::ordered_json;
  const ojson f = ojson::parse(render_fitch(2, Connective::Xor, {Format::Json, false}));
  CHECK(f["format_version"] == 1);
  CHECK(f["kind"] == "fitch");
  CHECK(f["fixed_point"] == true);
  CHECK(f["proof_code"]["proves_not_s"] == true);
  CHECK(f["h"] == "949679649955832733469602976761784946760282518968527205652538188006453550513122"
                  "250976667891432660198008307347329060844078");
  const ojson e = ojson::parse(render_epistemic(EpistemicSystem::days(2), false, {Format::Json}));
  CHECK(e["kind"] == "epistemic");
  CHECK(e["lemma"]["conclusion"] == "Kb A -> ~2");
  const ojson s = ojson::parse(render_surprise(5, true, {Format::Json}));
  CHECK(s["kind"] == "surprise");
  const std::string csv = render_surprise(3, false, {Format::Csv});
  CHECK(csv.rfind("day,p,q,cumulative\n", 0) == 0);
  CHECK(render_ipd(1, PayoffMatrix{}, {Format::Csv})
            .rfind("kind,row_strategy,column_strategy,path,row_value,column_value\n", 0) == 0);
  CHECK_THROWS_AS(render_fitch(2, Connective::Xor, {Format::Csv}), UsageError);
  CHECK_THROWS_AS(format_from_name("yaml"), UsageError);
  // Default text output abbreviates long codes.
  CHECK(render_fitch(2, Connective::Xor, {}).find("digits, sha256:") != std::string::npos);
}
