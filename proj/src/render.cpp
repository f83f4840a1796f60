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

#include "sxlab/render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sxlab/godel.hpp"
#include "sxlab/kernel.hpp"
#include "sxlab/surprise.hpp"

namespace sxlab {

namespace {

using ojson = nlohmann::ordered_json;

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson transcript_json(const Transcript& t) { return ojson::parse(to_json(t)); }

void require(const CheckReport& r, const char* what) {
  if (!r.accepted)
    throw std::logic_error(std::string("kernel rejected the generated ") + what + ": " +
                           r.to_string());
}

void no_csv(const RenderOptions& o, const char* what) {
  if (o.format == Format::Csv)
    throw UsageError(std::string("CSV output is not available for ") + what);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string connective_name(Connective c) {
  return c == Connective::Xor ? "xor" : "or";
}

std::string pair_string(const PayoffPair& v) {
  return "(" + v.first.get_str() + ", " + v.second.get_str() + ")";
}

std::string strategy_string(const std::vector<Action>& s) {
  std::string out;
  for (Action a : s) out += action_letter(a);
  return out;
}

std::string path_string(const History& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ' ';
    out += action_letter(h[i].first);
    out += action_letter(h[i].second);
  }
  return out;
}

ojson path_json(const History& h) {
  ojson a = ojson::array();
  for (const JointAction& j : h)
    a.push_back(std::string{action_letter(j.first), action_letter(j.second)});
  return a;
}

void collect_transcripts(const ojson& node, std::vector<const ojson*>& out) {
  if (node.is_object()) {
    if (node.contains("kind") && node["kind"] == "transcript") {
      out.push_back(&node);
      return;
    }
    for (const auto& [key, value] : node.items()) collect_transcripts(value, out);
  } else if (node.is_array()) {
    for (const ojson& v : node) collect_transcripts(v, out);
  }
}

std::string check_one(const Transcript& t, const CheckRequest& req) {
  const std::string rules = req.rules.value_or(t.rules);
  CheckReport r;
  if (rules == "fitch") {
    r = check(t.proof, RuleSet::fitch());
  } else if (rules == "knower") {
    r = check(t.proof, RuleSet::knower());
  } else if (rules == "epistemic") {
    if (req.system) {
      r = check(t.proof, *req.system);
    } else if (t.system) {
      r = check(t.proof, EpistemicSystem::from_record(*t.system));
    } else {
      throw UsageError("an epistemic transcript needs a system (give --days)");
    }
  } else if (rules.empty()) {
    throw UsageError("the transcript names no rule set (give --rules)");
  } else {
    throw UsageError("unknown rule set '" + rules + "'");
  }
  if (!r.accepted) return r.to_string();
  return "accepted (" + rules + ", " + std::to_string(t.proof.steps.size()) +
         " steps): " + print(t.proof.conclusion(), PrintOptions{&t.names, t.days});
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown output format '" + std::string(name) + "'");
}

//------------------------------------------------------------------------------

std::string render_fitch(std::uint32_t m, Connective c, const RenderOptions& o) {
  no_csv(o, "proofs");
  const FitchConstruction fc = build_fitch(m, c);
  Transcript t;
  t.rules = "fitch";
  t.names = fc.names();
  t.proof = derive_refutation(fc);
  require(check(t.proof, RuleSet::fitch()), "refutation");

  const Code s_code = encode(fc.sentence);
  const bool fixed = diag(fc.h, fc.h.value()) == s_code;
  const Code not_s = encode(t.proof.conclusion());
  const Code pc = proof_code(t.proof);
  const bool coded = check_proof_code(pc, not_s);
  if (!fixed || !coded) throw std::logic_error("fixed point or proof code check failed");

  const PrintOptions names{&t.names, t.days};
  // Everything but the name of the sentence itself.
  const PrintOptions unfolded{&t.names, t.days, t.names.bindings().size() - 1};
  if (o.format == Format::Json) {
    ojson doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "fitch";
    doc["m"] = m;
    doc["connective"] = connective_name(c);
    doc["open_formula"] = print(fc.open_formula, names);
    doc["h"] = fc.h.decimal();
    doc["sentence"] = print(fc.sentence, unfolded);
    doc["sentence_code"] = s_code.decimal();
    doc["fixed_point"] = fixed;
    ojson days = ojson::array();
    for (std::uint32_t k = 1; k <= m; ++k) {
      const Formula a = fc.day_implication(k);
      days.push_back({{"day", k},
                      {"term", print(fc.terms[k - 1], names)},
                      {"evaluates_to", print(a, names)},
                      {"code", encode(a).decimal()}});
    }
    doc["day_terms"] = days;
    doc["proof_code"] = {{"digits", pc.decimal().size()},
                         {"sha256", sha256_hex(pc.decimal())},
                         {"proves_not_s", coded}};
    doc["transcript"] = transcript_json(t);
    return dump(doc);
  }

  std::ostringstream out;
  out << "# Fitch construction, m=" << m << ", connective " << connective_name(c) << "\n"
      << "# h = " << abbreviate(fc.h.value()) << "\n"
      << "# S = " << print(fc.sentence, unfolded) << "\n"
      << "# diag(h,h) = #S: " << yes_no(fixed) << "\n";
  for (std::uint32_t k = 1; k <= m; ++k)
    out << "# " << print(fc.terms[k - 1], names) << " evaluates to #("
        << print(fc.day_implication(k), names) << ")\n";
  out << "# proof code: " << abbreviate(pc.value()) << "\n"
      << "# the proof code checks as a proof of ~S: " << yes_no(coded) << "\n"
      << to_text(t, o.full_codes);
  return out.str();
}

std::string render_epistemic(const EpistemicSystem& sys, bool lemma_only,
                             const RenderOptions& o) {
  no_csv(o, "proofs");
  if (lemma_only && sys.m < 2)
    throw DomainError("the elimination lemma needs at least two days");
  const Announcement ann = build_announcement(sys);
  Transcript t;
  t.rules = "epistemic";
  t.days = DayStyle::Bare;
  t.system = sys.record();
  t.names = announcement_names(sys);
  t.proof = derive_contradiction(sys);
  require(check(t.proof, sys), "contradiction");

  std::optional<Transcript> lemma;
  if (sys.m >= 2) {
    lemma = t;
    lemma->proof = derive_elimination_lemma(sys);
    require(check(lemma->proof, sys), "elimination lemma");
  }
  std::size_t lemma_step = 0;
  if (lemma)
    for (std::size_t i = 0; i < t.proof.steps.size() && !lemma_step; ++i)
      if (t.proof.steps[i].formula == lemma->proof.conclusion()) lemma_step = i + 1;

  const PrintOptions bare{nullptr, DayStyle::Bare};
  const PrintOptions named{&t.names, DayStyle::Bare};
  std::string agents;
  for (const std::string& a : sys.agents) agents += (agents.empty() ? "" : ",") + a;

  if (o.format == Format::Json) {
    ojson doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "epistemic";
    doc["system"] = {{"m", sys.m}, {"agents", sys.agents}, {"rules", sys.record().rules}};
    doc["announcement"] = print(ann.formula, bare);
    doc["hypothesis"] = print(sys.tower(), named);
    if (lemma) {
      doc["lemma"] = {{"conclusion", print(lemma->proof.conclusion(), named)},
                      {"step_in_contradiction", lemma_step},
                      {"transcript", transcript_json(*lemma)}};
    } else {
      doc["lemma"] = nullptr;
    }
    doc["contradiction"] = transcript_json(t);
    return dump(doc);
  }

  std::ostringstream out;
  out << "# epistemic system: m=" << sys.m << ", agents " << agents << "\n"
      << "# announcement A = " << print(ann.formula, bare) << "\n"
      << "# hypothesis: " << print(sys.tower(), named) << "\n";
  if (lemma) {
    out << "# lemma: " << print(lemma->proof.conclusion(), named);
    if (lemma_only)
      out << " (" << lemma->proof.steps.size() << " steps)\n";
    else
      out << " (step " << lemma_step << " below)\n";
  }
  out << to_text(lemma_only ? *lemma : t);
  return out.str();
}

std::string render_knower(const RenderOptions& o) {
  no_csv(o, "proofs");
  const KnowerConstruction kc = build_knower();
  Transcript t;
  t.rules = "knower";
  t.names = kc.names();
  t.proof = derive_knower_contradiction(kc);
  require(check(t.proof, RuleSet::knower()), "Knower contradiction");
  const bool fixed = diag(kc.h, kc.h.value()) == encode(kc.sentence);
  const Formula not_s = Formula::negate(kc.sentence);
  const bool self = eval_term(kc.sentence.term()) == encode(not_s);

  const PrintOptions names{&t.names, t.days};
  // Everything but the name of the sentence itself.
  const PrintOptions unfolded{&t.names, t.days, t.names.bindings().size() - 1};
  if (o.format == Format::Json) {
    ojson doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "knower";
    doc["open_formula"] = print(kc.open_formula, names);
    doc["h"] = kc.h.decimal();
    doc["sentence"] = print(kc.sentence, unfolded);
    doc["sentence_code"] = encode(kc.sentence).decimal();
    doc["fixed_point"] = fixed;
    doc["term_denotes_not_s"] = self;
    doc["transcript"] = transcript_json(t);
    return dump(doc);
  }
  std::ostringstream out;
  out << "# Knower sentence S = " << print(kc.sentence, unfolded) << "\n"
      << "# h = " << abbreviate(kc.h.value()) << "\n"
      << "# diag(h,h) = #S: " << yes_no(fixed) << "\n"
      << "# Neg D(h,h) evaluates to #~S: " << yes_no(self) << "\n"
      << to_text(t, o.full_codes);
  return out.str();
}

std::string render_ipd(std::uint32_t n, const PayoffMatrix& pm, const RenderOptions& o) {
  const SpeResult spe = solve_spe(n, pm);
  std::optional<std::vector<Equilibrium>> eqs;
  if (n <= 2) eqs = enumerate_pure_nash(n, pm);
  const History path = spe.profile.path();

  if (o.format == Format::Json) {
    ojson doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "ipd";
    doc["n"] = n;
    doc["payoffs"] = {{"T", pm.T.get_str()},
                      {"R", pm.R.get_str()},
                      {"P", pm.P.get_str()},
                      {"S", pm.S.get_str()}};
    doc["spe"] = {{"all_defect", spe.profile.all_defect()},
                  {"path", path_json(path)},
                  {"value", {spe.value.first.get_str(), spe.value.second.get_str()}}};
    if (eqs) {
      ojson list = ojson::array();
      for (const Equilibrium& e : *eqs)
        list.push_back({{"row_strategy", strategy_string(e.profile.moves[0])},
                        {"column_strategy", strategy_string(e.profile.moves[1])},
                        {"path", path_json(e.path)},
                        {"value", {e.value.first.get_str(), e.value.second.get_str()}}});
      doc["equilibria"] = list;
    } else {
      doc["equilibria"] = nullptr;
    }
    return dump(doc);
  }

  std::ostringstream out;
  if (o.format == Format::Csv) {
    out << "kind,row_strategy,column_strategy,path,row_value,column_value\n";
    out << "spe," << (spe.profile.all_defect() ? "all-D" : "mixed") << ","
        << (spe.profile.all_defect() ? "all-D" : "mixed") << "," << path_string(path)
        << "," << spe.value.first.get_str() << "," << spe.value.second.get_str() << "\n";
    if (eqs)
      for (const Equilibrium& e : *eqs)
        out << "nash," << strategy_string(e.profile.moves[0]) << ","
            << strategy_string(e.profile.moves[1]) << "," << path_string(e.path) << ","
            << e.value.first.get_str() << "," << e.value.second.get_str() << "\n";
    return out.str();
  }

  out << "iterated prisoner's dilemma, n=" << n << ", payoffs T,R,P,S = "
      << pm.to_string() << "\n"
      << "subgame-perfect equilibrium: "
      << (spe.profile.all_defect() ? "Defect at every history" : "not all-defect") << "\n"
      << "  play path: " << path_string(path) << "\n"
      << "  value: " << pair_string(spe.value) << "\n";
  if (eqs) {
    bool all_defect_paths = true;
    for (const Equilibrium& e : *eqs)
      for (const JointAction& j : e.path)
        all_defect_paths = all_defect_paths && j.first == Action::Defect &&
                           j.second == Action::Defect;
    out << "pure Nash equilibria: " << eqs->size() << " (strategies list the move at "
        << "each history in order; every play path all-defect: "
        << yes_no(all_defect_paths) << ")\n";
    for (std::size_t i = 0; i < eqs->size(); ++i) {
      const Equilibrium& e = (*eqs)[i];
      out << "  " << i + 1 << ". row " << strategy_string(e.profile.moves[0])
          << "  column " << strategy_string(e.profile.moves[1]) << "  path "
          << path_string(e.path) << "  value " << pair_string(e.value) << "\n";
    }
  } else {
    out << "pure Nash enumeration: only for n <= 2\n";
  }
  return out.str();
}

std::string render_surprise(std::uint32_t m, bool oracle, const RenderOptions& o) {
  const HazardSchedule h = narveson(m);
  const double value = expected_surprise(h);
  std::optional<OracleResult> orc;
  double distance = 0;
  if (oracle) {
    orc = oracle_maximize(m);
    for (std::uint32_t k = 0; k < m; ++k)
      distance = std::max(distance, std::abs(orc->p[k] - h.p[k]));
  }

  if (o.format == Format::Json) {
    ojson doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "surprise";
    doc["m"] = m;
    ojson days = ojson::array();
    for (std::uint32_t k = 1; k <= m; ++k)
      days.push_back({{"day", k},
                      {"p", h.p[k - 1]},
                      {"q", h.hazard(k)},
                      {"cumulative", h.cumulative(k)}});
    doc["days"] = days;
    doc["q"] = h.q;
    doc["s"] = h.s;
    doc["expected_surprise"] = value;
    if (orc) {
      doc["oracle"] = {{"p", orc->p},
                       {"q", orc->q},
                       {"expected_surprise", orc->value},
                       {"max_difference", distance},
                       {"perturbation_gain", orc->best_perturbation_gain},
                       {"perturbation_ok", orc->perturbation_ok}};
    } else {
      doc["oracle"] = nullptr;
    }
    return dump(doc);
  }

  std::ostringstream out;
  if (o.format == Format::Csv) {
    out << "day,p,q,cumulative" << (orc ? ",oracle_p,oracle_q" : "") << "\n";
    for (std::uint32_t k = 1; k <= m; ++k) {
      out << k << "," << fixed6(h.p[k - 1]) << "," << fixed6(h.hazard(k)) << ","
          << fixed6(h.cumulative(k));
      if (orc) out << "," << fixed6(orc->p[k - 1]) << "," << fixed6(orc->q[m - k]);
      out << "\n";
    }
    return out.str();
  }

  out << "maximum expected surprise schedule, m=" << m << "\n"
      << "day  p         q         cumulative\n";
  for (std::uint32_t k = 1; k <= m; ++k)
    out << k << std::string(k < 10 ? 4 : 3, ' ') << fixed6(h.p[k - 1]) << "  "
        << fixed6(h.hazard(k)) << "  " << fixed6(h.cumulative(k)) << "\n";
  out << "expected surprise: " << fixed6(value) << " (|.| = " << fixed6(std::abs(value))
      << ")\n";
  if (orc) {
    out << "oracle p:";
    for (double x : orc->p) out << " " << fixed6(x);
    out << "\noracle max |p - p*|: " << fixed6(distance)
        << "\noracle perturbation check: " << (orc->perturbation_ok ? "ok" : "FAILED")
        << "\n";
  }
  return out.str();
}

//------------------------------------------------------------------------------

CheckOutcome check_document(std::string_view text, const CheckRequest& req) {
  std::vector<Transcript> ts;
  const std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text[b] == '{') {
    ojson doc;
    try {
      doc = ojson::parse(text);
    } catch (const ojson::exception& e) {
      throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    std::vector<const ojson*> found;
    collect_transcripts(doc, found);
    if (found.empty()) throw FormatError("no transcript in document");
    for (const ojson* f : found) ts.push_back(transcript_from_json(f->dump()));
  } else {
    ts.push_back(transcript_from_text(text));
  }
  CheckOutcome out;
  for (const Transcript& t : ts) {
    const std::string line = check_one(t, req);
    out.accepted = out.accepted && line.rfind("accepted", 0) == 0;
    out.report += line + "\n";
  }
  return out;
}

void write_goldens(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());

  const RenderOptions text{Format::Text, true};
  const RenderOptions json{Format::Json, true};
  const RenderOptions csv{Format::Csv, true};
  const auto both = [&](const std::string& stem, auto&& render) {
    write_file(root / (stem + ".txt"), render(text));
    write_file(root / (stem + ".json"), render(json));
  };

  const std::pair<std::uint32_t, Connective> fitch[] = {
      {1, Connective::InclusiveOr},
      {2, Connective::Xor},
      {2, Connective::InclusiveOr},
      {3, Connective::InclusiveOr}};
  for (const auto& [m, c] : fitch)
    both("fitch_m" + std::to_string(m) + "_" + connective_name(c),
         [&](const RenderOptions& o) { return render_fitch(m, c, o); });
  for (std::uint32_t m = 1; m <= 5; ++m)
    both("epistemic_m" + std::to_string(m), [&](const RenderOptions& o) {
      return render_epistemic(EpistemicSystem::days(m), false, o);
    });
  both("epistemic_students_m5", [&](const RenderOptions& o) {
    return render_epistemic(EpistemicSystem::students(5), false, o);
  });
  both("knower", [&](const RenderOptions& o) { return render_knower(o); });
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const std::string stem = "ipd_n" + std::to_string(n);
    both(stem, [&](const RenderOptions& o) { return render_ipd(n, PayoffMatrix{}, o); });
    write_file(root / (stem + ".csv"), render_ipd(n, PayoffMatrix{}, csv));
  }
  for (std::uint32_t m = 1; m <= 7; ++m) {
    const std::string stem = "surprise_m" + std::to_string(m);
    write_file(root / (stem + ".csv"), render_surprise(m, false, csv));
    write_file(root / (stem + ".json"), render_surprise(m, false, json));
  }
}

}  // namespace sxlab
