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

#include <string>

#include "doctest.h"
#include "sxlab/epistemic.hpp"
#include "sxlab/kernel.hpp"
#include "sxlab/proof.hpp"
#include "sxlab/selfref.hpp"

using namespace sxlab;

namespace {

Transcript fitch_transcript() {
  const FitchConstruction fc = build_fitch(2, Connective::Xor);
  Transcript t;
  t.rules = "fitch";
  t.names = fc.names();
  t.proof = derive_refutation(fc);
  return t;
}

}  // namespace

TEST_CASE("text transcript round trip") {
  const Transcript t = fitch_transcript();
  const std::string text = to_text(t);
  const Transcript back = transcript_from_text(text);
  CHECK(back.rules == "fitch");
  CHECK(back.proof == t.proof);
  CHECK(to_text(back) == text);
  CHECK(load_transcript(text).proof == t.proof);
}

TEST_CASE("JSON transcript round trip") {
  const Transcript t = fitch_transcript();
  const std::string json = to_json(t);
  const Transcript back = transcript_from_json(json);
  CHECK(back.proof == t.proof);
  CHECK(to_json(back) == json);
  CHECK(load_transcript(json).proof == t.proof);
}

TEST_CASE("comment lines before and among the directives are skipped") {
  const Transcript t = fitch_transcript();
  const std::string text = "# leading comment\n\n" + to_text(t);
  CHECK(transcript_from_text(text).proof == t.proof);
  std::string inner = to_text(t);
  inner.insert(inner.find("let "), "# between directives\n");
  CHECK(transcript_from_text(inner).proof == t.proof);
}

TEST_CASE("abbreviated codes cannot be re-read") {
  const std::string text = to_text(fitch_transcript(), false);
  CHECK(text.find("digits, sha256:") != std::string::npos);
  CHECK_THROWS_AS(transcript_from_text(text), FormatError);
}

TEST_CASE("malformed transcripts") {
  CHECK_THROWS_AS(transcript_from_text(""), FormatError);
  CHECK_THROWS_AS(transcript_from_text("sxlab-transcript 2\nrules fitch\n1. Q1 [TAUT]\n"),
                  FormatError);
  CHECK_THROWS_AS(transcript_from_text("sxlab-transcript 1\nrules fitch\n1. Q1 [FOO]\n"),
                  FormatError);
  CHECK_THROWS_AS(transcript_from_text("sxlab-transcript 1\nrules fitch\n2. Q1 [TAUT]\n"),
                  FormatError);
  CHECK_THROWS_AS(transcript_from_json("{\"kind\":\"transcript\"}"), FormatError);
  CHECK_THROWS_AS(transcript_from_json("[1,2"), FormatError);
}

TEST_CASE("a hand-written transcript is checked") {
  const std::string text =
      "sxlab-transcript 1\n"
      "rules fitch\n"
      "days q\n"
      "1. Q1 -> Q1 [TAUT]\n"
      "2. (Q1 -> Q1) -> (Q2 | ~Q2) [TAUT]\n"
      "3. Q2 | ~Q2 [MP 2,1]\n";
  const Transcript t = transcript_from_text(text);
  CHECK(check(t.proof, RuleSet::fitch()).accepted);
  CHECK(to_text(t) == text);
}

TEST_CASE("extract keeps the dependency cone") {
  const Proof p = fitch_transcript().proof;
  const Proof one = extract(p, 1);
  CHECK(one.steps.size() == 1);
  for (std::size_t id = 1; id <= p.steps.size(); ++id) {
    const Proof e = extract(p, id);
    CHECK(e.conclusion() == p.at(id));
    CHECK(check(e, RuleSet::fitch()).accepted);
  }
}
