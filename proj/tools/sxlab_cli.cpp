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

// sxlab: command-line front end over the C interface.
//
// Exit status: 0 success, 1 I/O or internal failure, 2 usage error,
// 3 domain precondition, 4 check failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sxlab/sxlab.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3, kCheck = 4 };

int exit_code(sxlab_status s) {
  switch (s) {
    case SXLAB_OK: return kOk;
    case SXLAB_E_USAGE: return kUsage;
    case SXLAB_E_DOMAIN: return kDomain;
    case SXLAB_E_CHECK:
    case SXLAB_E_PARSE: return kCheck;
    default: return kFailure;
  }
}

struct Output {
  std::string format;
  bool json = false;
  bool csv = false;
  bool full_codes = false;
  std::string path;
};

void output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("-f,--format", out.format, "text, json or csv (default $SXLAB_FORMAT or text)");
  cmd->add_flag("--json", out.json, "same as --format json");
  cmd->add_flag("--csv", out.csv, "same as --format csv");
  cmd->add_flag("--full-codes", out.full_codes, "print Goedel numbers in full");
  cmd->add_option("-o,--output", out.path, "write to this file instead of stdout");
}

int report_error(sxlab_status s) {
  std::cerr << "sxlab: " << sxlab_last_error() << "\n";
  return exit_code(s);
}

std::optional<sxlab_render_options> resolve(const Output& out, int& code) {
  std::string name = out.format;
  if (out.json + out.csv > 1 || ((out.json || out.csv) && !name.empty())) {
    std::cerr << "sxlab: conflicting output formats\n";
    code = kUsage;
    return std::nullopt;
  }
  if (out.json) name = "json";
  if (out.csv) name = "csv";
  if (name.empty()) {
    const char* env = std::getenv("SXLAB_FORMAT");
    name = env && *env ? env : "text";
  }
  sxlab_render_options o{SXLAB_FORMAT_TEXT, out.full_codes ? 1 : 0};
  if (const sxlab_status s = sxlab_format_parse(name.c_str(), &o.format); s != SXLAB_OK) {
    code = report_error(s);
    return std::nullopt;
  }
  return o;
}

int deliver(sxlab_status s, char* text, const Output& out) {
  if (s != SXLAB_OK) return report_error(s);
  int code = kOk;
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) {
      std::cerr << "sxlab: cannot write " << out.path << "\n";
      code = kFailure;
    }
  }
  sxlab_string_free(text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surprise-examination workbench: self-reference, epistemic logic, "
               "repeated games and surprise-maximising schedules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sxlab_version()));

  Output out;
  std::uint32_t days = 0;
  bool exclusive = false;
  std::string connective;
  std::string agents;
  bool lemma = false;
  std::uint32_t rounds = 2;
  std::string payoffs;
  bool oracle = false;
  std::string file;
  std::string rules;
  std::string dir;

  auto* fitch = app.add_subcommand("fitch", "Fitch's self-referential announcement and its refutation");
  fitch->add_option("-m,--days", days, "number of days (default 2)");
  fitch->add_flag("--xor", exclusive, "join the day clauses with exclusive or");
  fitch->add_option("--connective", connective, "or | xor")->check(CLI::IsMember({"or", "xor"}));
  output_flags(fitch, out);

  auto* epistemic = app.add_subcommand("epistemic", "announcement, elimination lemma and contradiction under KD/KI/KE");
  epistemic->add_option("-m,--days", days, "number of days (default 2)");
  epistemic->add_option("--agents", agents, "'students' or a comma-separated list of agent ids");
  epistemic->add_flag("--lemma", lemma, "emit the elimination lemma instead of the contradiction");
  output_flags(epistemic, out);

  auto* knower = app.add_subcommand("knower", "the Knower sentence and its contradiction");
  output_flags(knower, out);

  auto* ipd = app.add_subcommand("ipd", "finitely repeated prisoner's dilemma");
  ipd->add_option("-n,--rounds", rounds, "number of rounds (default 2, at most 10)");
  ipd->add_option("--payoffs", payoffs, "T,R,P,S (default 2,1,0,-2)");
  output_flags(ipd, out);

  auto* surprise = app.add_subcommand("surprise", "maximum expected surprise schedule");
  surprise->add_option("-m,--days", days, "number of days (default 5)");
  surprise->add_flag("--oracle", oracle, "compare with the numerical optimiser");
  output_flags(surprise, out);

  auto* check = app.add_subcommand("check", "re-check a transcript or report");
  check->add_option("file", file, "transcript (text or JSON)")->required();
  check->add_option("--rules", rules, "fitch | knower | epistemic")
      ->check(CLI::IsMember({"fitch", "knower", "epistemic"}));
  check->add_option("-m,--days", days, "epistemic system size");
  check->add_option("--agents", agents, "epistemic agents, as for 'epistemic'");

  auto* goldens = app.add_subcommand("goldens", "write the golden transcripts and tables");
  goldens->add_option("dir", dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (check->parsed()) {
    std::ifstream f(file, std::ios::binary);
    if (!f) {
      std::cerr << "sxlab: cannot read " << file << "\n";
      return kFailure;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    char* report = nullptr;
    const sxlab_status s = sxlab_check(buf.str().c_str(), rules.empty() ? nullptr : rules.c_str(),
                                       days, agents.c_str(), &report);
    if (report) {
      std::cout << report;
      sxlab_string_free(report);
    }
    if (s != SXLAB_OK) return report_error(s);
    return kOk;
  }
  if (goldens->parsed()) {
    const sxlab_status s = sxlab_write_goldens(dir.c_str());
    return s == SXLAB_OK ? kOk : report_error(s);
  }

  int code = kOk;
  const auto opts = resolve(out, code);
  if (!opts) return code;
  const auto pick = [&](CLI::App* cmd, std::uint32_t fallback) {
    return cmd->count("--days") ? days : fallback;
  };
  char* text = nullptr;
  sxlab_status s = SXLAB_OK;
  if (fitch->parsed()) {
    if (exclusive && connective == "or") {
      std::cerr << "sxlab: --xor contradicts --connective or\n";
      return kUsage;
    }
    s = sxlab_render_fitch(pick(fitch, 2), exclusive || connective == "xor", &*opts, &text);
  } else if (epistemic->parsed()) {
    s = sxlab_render_epistemic(pick(epistemic, 2), agents.c_str(), lemma ? 1 : 0, &*opts, &text);
  } else if (knower->parsed()) {
    s = sxlab_render_knower(&*opts, &text);
  } else if (ipd->parsed()) {
    s = sxlab_render_ipd(rounds, payoffs.empty() ? nullptr : payoffs.c_str(), &*opts, &text);
  } else if (surprise->parsed()) {
    s = sxlab_render_surprise(pick(surprise, 5), oracle ? 1 : 0, &*opts, &text);
  }
  return deliver(s, text, out);
}
