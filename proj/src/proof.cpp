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

#include "sxlab/proof.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sxlab/godel.hpp"

namespace sxlab {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 12> kRuleNames{{
    {Rule::HYP, "HYP"},
    {Rule::TAUT, "TAUT"},
    {Rule::MP, "MP"},
    {Rule::EVAL, "EVAL"},
    {Rule::NEC, "NEC"},
    {Rule::SCHEMA_A, "SCHEMA_A"},
    {Rule::AXIOM_B, "AXIOM_B"},
    {Rule::RULE_C, "RULE_C"},
    {Rule::KD_conj, "KD_conj"},
    {Rule::KD_mp, "KD_mp"},
    {Rule::KI, "KI"},
    {Rule::KE, "KE"},
}};

constexpr std::string_view kTextHeader = "sxlab-transcript 1";

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames)
    if (n == name) return rule;
  return std::nullopt;
}

bool Step::operator==(const Step& o) const {
  return rule == o.rule && premises == o.premises && formula == o.formula &&
         subproofs == o.subproofs;
}

std::size_t Proof::add(Formula f, Rule r, std::vector<std::size_t> premises,
                       std::vector<Proof> subproofs) {
  steps.push_back(
      Step{std::move(f), r, std::move(premises), std::move(subproofs)});
  return steps.size();
}

const Formula& Proof::conclusion() const {
  if (steps.empty()) throw DomainError("empty proof has no conclusion");
  return steps.back().formula;
}

Proof extract(const Proof& p, std::size_t id) {
  if (id == 0 || id > p.steps.size()) throw DomainError("no such step");
  std::vector<bool> keep(id + 1, false);
  keep[id] = true;
  for (std::size_t i = id; i >= 1; --i) {
    if (!keep[i]) continue;
    for (std::size_t q : p.steps[i - 1].premises)
      if (q >= 1 && q < i) keep[q] = true;
  }
  std::vector<std::size_t> renumber(id + 1, 0);
  Proof out;
  for (std::size_t i = 1; i <= id; ++i) {
    if (!keep[i]) continue;
    Step s = p.steps[i - 1];
    for (std::size_t& q : s.premises) q = renumber[q];
    out.steps.push_back(std::move(s));
    renumber[i] = out.steps.size();
  }
  return out;
}

//------------------------------------------------------------------------------
// Shared helpers

namespace {

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t b = 0;
  for (;;) {
    const std::size_t e = s.find(sep, b);
    out.emplace_back(s.substr(b, e == std::string_view::npos ? e : e - b));
    if (e == std::string_view::npos) break;
    b = e + 1;
  }
  return out;
}

std::size_t to_index(std::string_view s, const std::string& where) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw FormatError(where + ": expected a step number, got '" +
                      std::string(s) + "'");
  return v;
}

std::string_view days_name(DayStyle d) { return d == DayStyle::Q ? "q" : "bare"; }

DayStyle days_from(std::string_view s, const std::string& where) {
  if (s == "q") return DayStyle::Q;
  if (s == "bare") return DayStyle::Bare;
  throw FormatError(where + ": unknown day style '" + std::string(s) + "'");
}

Rule rule_or_throw(std::string_view s, const std::string& where) {
  if (auto r = rule_from_name(s)) return *r;
  throw FormatError(where + ": unknown rule '" + std::string(s) + "'");
}

Formula parse_at(std::string_view text, const Env& env, const std::string& where) {
  try {
    return parse(text, env);
  } catch (const SyntaxError& e) {
    throw FormatError(where + ": " + e.what());
  } catch (const DomainError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

}  // namespace

//------------------------------------------------------------------------------
// Text form

namespace {

void write_steps(const Proof& p, const PrintOptions& po, int depth,
                 std::ostringstream& out) {
  const std::string pad(2 * depth, ' ');
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    out << pad << (i + 1) << ". " << print(s.formula, po) << " ["
        << rule_name(s.rule);
    if (!s.premises.empty()) {
      out << ' ';
      for (std::size_t k = 0; k < s.premises.size(); ++k)
        out << (k ? "," : "") << s.premises[k];
    }
    if (s.subproofs.empty()) {
      out << "]\n";
      continue;
    }
    out << " {\n";
    for (std::size_t k = 0; k < s.subproofs.size(); ++k) {
      write_steps(s.subproofs[k], po, depth + 1, out);
      out << pad << (k + 1 == s.subproofs.size() ? "}]" : "} {") << '\n';
    }
  }
}

class TextReader {
 public:
  TextReader(std::vector<std::string> lines, Transcript& t)
      : lines_(std::move(lines)), t_(t) {}

  void run() {
    while (pos_ < lines_.size() && is_comment(lines_[pos_])) ++pos_;
    if (pos_ == lines_.size() || lines_[pos_] != kTextHeader)
      throw FormatError(where() + ": expected '" + std::string(kTextHeader) + "'");
    ++pos_;
    while (pos_ < lines_.size() && !is_step_line(lines_[pos_])) {
      if (is_comment(lines_[pos_]))
        ++pos_;
      else
        directive();
    }
    t_.proof = block(0);
    if (pos_ != lines_.size())
      throw FormatError(where() + ": unexpected line '" + lines_[pos_] + "'");
  }

 private:
  std::string where() const { return "line " + std::to_string(pos_ + 1); }

  static bool is_comment(const std::string& l) { return l.empty() || l[0] == '#'; }

  static bool is_step_line(const std::string& l) {
    return !l.empty() && std::isdigit(static_cast<unsigned char>(l[0]));
  }

  void directive() {
    const std::string& l = lines_[pos_];
    const std::size_t sp = l.find(' ');
    const std::string key = l.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : l.substr(sp + 1);
    if (key == "rules") {
      t_.rules = rest;
    } else if (key == "days") {
      t_.days = days_from(rest, where());
    } else if (key == "system") {
      SystemRecord sys;
      for (const std::string& kv : split(rest, ' ')) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
          throw FormatError(where() + ": malformed system field '" + kv + "'");
        const std::string k = kv.substr(0, eq);
        const std::string v = kv.substr(eq + 1);
        if (k == "m")
          sys.m = static_cast<std::uint32_t>(to_index(v, where()));
        else if (k == "agents")
          sys.agents = split(v, ',');
        else if (k == "rules")
          sys.rules = split(v, ',');
        else
          throw FormatError(where() + ": unknown system field '" + k + "'");
      }
      t_.system = std::move(sys);
    } else if (key == "let") {
      const std::size_t eq = rest.find(" = ");
      if (eq == std::string::npos)
        throw FormatError(where() + ": expected 'let <name> = <value>'");
      const std::string name = rest.substr(0, eq);
      const std::string value = rest.substr(eq + 3);
      try {
        if (Env::valid_numeral_name(name)) {
          if (value.empty() ||
              value.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError(where() + ": numeral binding must be decimal"
                              " (abbreviated codes cannot be re-checked)");
          t_.names.bind_numeral(name, Natural(value, 10));
        } else {
          t_.names.bind_formula(name, parse_at(value, t_.names, where()));
        }
      } catch (const DomainError& e) {
        throw FormatError(where() + ": " + e.what());
      }
    } else {
      throw FormatError(where() + ": unknown directive '" + key + "'");
    }
    ++pos_;
  }

  Proof block(int depth) {
    Proof p;
    const std::string pad(2 * depth, ' ');
    while (pos_ < lines_.size()) {
      const std::string& l = lines_[pos_];
      if (l.compare(0, pad.size(), pad) != 0) break;
      std::string_view body(l);
      body.remove_prefix(pad.size());
      if (body.empty() || !std::isdigit(static_cast<unsigned char>(body[0])))
        break;
      step(p, body, depth);
    }
    if (p.steps.empty()) throw FormatError(where() + ": expected a proof step");
    return p;
  }

  void step(Proof& p, std::string_view body, int depth) {
    const std::string w = where();
    const std::size_t dot = body.find(". ");
    if (dot == std::string_view::npos)
      throw FormatError(w + ": expected '<n>. <formula> [<rule>]'");
    const std::size_t n = to_index(body.substr(0, dot), w);
    if (n != p.steps.size() + 1)
      throw FormatError(w + ": step numbered " + std::to_string(n) +
                        ", expected " + std::to_string(p.steps.size() + 1));
    std::string_view rest = body.substr(dot + 2);
    const std::size_t open = rest.rfind(" [");
    if (open == std::string_view::npos)
      throw FormatError(w + ": missing justification");
    const std::string_view text = rest.substr(0, open);
    std::string_view just = rest.substr(open + 2);

    bool has_sub = false;
    if (just.size() >= 2 && just.substr(just.size() - 2) == " {") {
      has_sub = true;
      just.remove_suffix(2);
    } else if (!just.empty() && just.back() == ']') {
      just.remove_suffix(1);
    } else {
      throw FormatError(w + ": justification must end with ']' or ' {'");
    }

    Step s{parse_at(text, t_.names, w), Rule::TAUT, {}, {}};
    const std::size_t sp = just.find(' ');
    s.rule = rule_or_throw(just.substr(0, sp), w);
    if (sp != std::string_view::npos)
      for (const std::string& id : split(just.substr(sp + 1), ','))
        s.premises.push_back(to_index(id, w));
    ++pos_;

    if (has_sub) {
      const std::string pad(2 * depth, ' ');
      for (;;) {
        s.subproofs.push_back(block(depth + 1));
        if (pos_ >= lines_.size())
          throw FormatError(where() + ": unterminated sub-proof");
        if (lines_[pos_] == pad + "} {") {
          ++pos_;
          continue;
        }
        if (lines_[pos_] == pad + "}]") {
          ++pos_;
          break;
        }
        throw FormatError(where() + ": expected '}]' or '} {'");
      }
    }
    p.steps.push_back(std::move(s));
  }

  std::vector<std::string> lines_;
  Transcript& t_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Transcript& t, bool full_codes) {
  std::ostringstream out;
  out << kTextHeader << '\n';
  if (!t.rules.empty()) out << "rules " << t.rules << '\n';
  out << "days " << days_name(t.days) << '\n';
  if (t.system)
    out << "system m=" << t.system->m << " agents=" << join(t.system->agents, ',')
        << " rules=" << join(t.system->rules, ',') << '\n';
  const auto& bs = t.names.bindings();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    out << "let " << bs[i].name << " = ";
    if (auto* n = std::get_if<Natural>(&bs[i].value)) {
      out << (full_codes ? n->get_str(10) : abbreviate(*n));
    } else {
      PrintOptions po{&t.names, t.days, i};
      out << print(std::get<Formula>(bs[i].value), po);
    }
    out << '\n';
  }
  write_steps(t.proof, PrintOptions{&t.names, t.days}, 0, out);
  return out.str();
}

Transcript transcript_from_text(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::string& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  Transcript t;
  TextReader(std::move(lines), t).run();
  return t;
}

//------------------------------------------------------------------------------
// JSON form

namespace {

using ojson = nlohmann::ordered_json;

ojson steps_json(const Proof& p, const PrintOptions& po) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    ojson j;
    j["step"] = i + 1;
    j["formula"] = print(s.formula, po);
    j["rule"] = std::string(rule_name(s.rule));
    j["premises"] = s.premises;
    ojson subs = ojson::array();
    for (const Proof& sub : s.subproofs) subs.push_back(steps_json(sub, po));
    j["subproofs"] = std::move(subs);
    arr.push_back(std::move(j));
  }
  return arr;
}

Proof steps_from_json(const ojson& arr, const Env& env, const std::string& path) {
  if (!arr.is_array() || arr.empty())
    throw FormatError(path + ": expected a non-empty array of steps");
  Proof p;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const ojson& j = arr[i];
    const std::string w = path + "[" + std::to_string(i) + "]";
    if (!j.is_object()) throw FormatError(w + ": expected an object");
    if (j.value("step", std::size_t{0}) != i + 1)
      throw FormatError(w + ": step must be " + std::to_string(i + 1));
    Step s{parse_at(j.at("formula").get<std::string>(), env, w + ".formula"),
           rule_or_throw(j.at("rule").get<std::string>(), w), {}, {}};
    s.premises = j.at("premises").get<std::vector<std::size_t>>();
    const ojson& subs = j.at("subproofs");
    for (std::size_t k = 0; k < subs.size(); ++k)
      s.subproofs.push_back(steps_from_json(
          subs[k], env, w + ".subproofs[" + std::to_string(k) + "]"));
    p.steps.push_back(std::move(s));
  }
  return p;
}

}  // namespace

std::string to_json(const Transcript& t) {
  ojson doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "transcript";
  doc["rules"] = t.rules;
  doc["days"] = std::string(days_name(t.days));
  if (t.system) {
    doc["system"] = {{"m", t.system->m},
                     {"agents", t.system->agents},
                     {"rules", t.system->rules}};
  }
  ojson names = ojson::array();
  const auto& bs = t.names.bindings();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    ojson b;
    b["name"] = bs[i].name;
    if (auto* n = std::get_if<Natural>(&bs[i].value)) {
      b["numeral"] = n->get_str(10);
    } else {
      PrintOptions po{&t.names, t.days, i};
      b["formula"] = print(std::get<Formula>(bs[i].value), po);
    }
    names.push_back(std::move(b));
  }
  doc["names"] = std::move(names);
  doc["proof"] = steps_json(t.proof, PrintOptions{&t.names, t.days});
  return doc.dump(2) + "\n";
}

Transcript transcript_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.value("format_version", 0) != kFormatVersion)
      throw FormatError("unsupported format_version");
    Transcript t;
    t.rules = doc.value("rules", std::string());
    t.days = days_from(doc.value("days", std::string("q")), "days");
    if (doc.contains("system")) {
      const ojson& s = doc["system"];
      t.system = SystemRecord{s.at("m").get<std::uint32_t>(),
                              s.at("agents").get<std::vector<std::string>>(),
                              s.at("rules").get<std::vector<std::string>>()};
    }
    for (const ojson& b : doc.value("names", ojson::array())) {
      const std::string name = b.at("name").get<std::string>();
      try {
        if (b.contains("numeral")) {
          const std::string v = b["numeral"].get<std::string>();
          if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError("names." + name + ": numeral must be decimal");
          t.names.bind_numeral(name, Natural(v, 10));
        } else {
          t.names.bind_formula(
              name, parse_at(b.at("formula").get<std::string>(), t.names,
                             "names." + name));
        }
      } catch (const DomainError& e) {
        throw FormatError("names." + name + ": " + e.what());
      }
    }
    t.proof = steps_from_json(doc.at("proof"), t.names, "proof");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed transcript: ") + e.what());
  }
}

Transcript load_transcript(std::string_view text) {
  const std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text[b] == '{')
    return transcript_from_json(text);
  return transcript_from_text(text);
}

}  // namespace sxlab
