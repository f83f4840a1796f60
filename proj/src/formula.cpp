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

#include "sxlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace sxlab {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_natural(const Natural& n) {
  std::size_t h = 0xcbf29ce484222325ULL;
  const std::size_t limbs = mpz_size(n.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i)
    h = mix(h, static_cast<std::size_t>(mpz_getlimbn(n.get_mpz_t(), i)));
  return mix(h, limbs);
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": " + what),
      offset_(offset) {}

//------------------------------------------------------------------------------
// Term

Term Term::make(TermKind kind, Natural value, std::vector<Term> kids) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->closed = kind != TermKind::Var;
  n->size = 1;
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  if (kind == TermKind::Numeral) h = mix(h, hash_natural(value));
  for (const Term& k : kids) {
    n->closed = n->closed && k.closed();
    n->size += k.size();
    h = mix(h, k.hash());
  }
  n->hash = h;
  n->value = std::move(value);
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::numeral(Natural value) {
  if (value < 0) throw DomainError("numerals must be non-negative");
  return make(TermKind::Numeral, std::move(value), {});
}
Term Term::var() {
  static const Term x = make(TermKind::Var, 0, {});
  return x;
}
Term Term::neg(Term t) { return make(TermKind::Neg, 0, {std::move(t)}); }
Term Term::conj(Term a, Term b) {
  return make(TermKind::Conj, 0, {std::move(a), std::move(b)});
}
Term Term::imp(Term a, Term b) {
  return make(TermKind::Imp, 0, {std::move(a), std::move(b)});
}
Term Term::diag(Term a, Term b) {
  return make(TermKind::Diag, 0, {std::move(a), std::move(b)});
}

const Natural& Term::value() const {
  if (kind() != TermKind::Numeral) throw std::logic_error("not a numeral");
  return node_->value;
}
const Term& Term::lhs() const { return node_->kids.at(0); }
const Term& Term::rhs() const { return node_->kids.at(1); }

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (hash() != o.hash() || kind() != o.kind() || size() != o.size())
    return false;
  if (kind() == TermKind::Numeral) return node_->value == o.node_->value;
  return std::equal(node_->kids.begin(), node_->kids.end(),
                    o.node_->kids.begin());
}

//------------------------------------------------------------------------------
// Formula

bool is_binary(FormulaKind k) {
  switch (k) {
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Xor:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return true;
    default:
      return false;
  }
}

Formula Formula::make(Node n) {
  std::size_t h = mix(0x2545f491, static_cast<std::size_t>(n.kind));
  h = mix(h, n.day);
  h = mix(h, static_cast<std::size_t>(n.label));
  if (!n.agent.empty()) h = mix(h, std::hash<std::string>{}(n.agent));
  n.size = 1;
  if (n.term) {
    h = mix(h, n.term->hash());
    n.size += n.term->size();
    n.has_var = !n.term->closed();
    n.has_pred = true;
  }
  n.has_know = n.kind == FormulaKind::Know;
  for (const Formula& k : n.kids) {
    h = mix(h, k.hash());
    n.size += k.size();
    n.has_var = n.has_var || k.has_var();
    n.has_know = n.has_know || k.has_know();
    n.has_pred = n.has_pred || k.has_pred();
  }
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::falsum() {
  static const Formula f = [] {
    Node n{};
    n.kind = FormulaKind::Falsum;
    return make(std::move(n));
  }();
  return f;
}

Formula Formula::day(std::uint32_t k) {
  if (k == 0) throw DomainError("day indices start at 1");
  Node n{};
  n.kind = FormulaKind::Day;
  n.day = k;
  return make(std::move(n));
}

Formula Formula::pred(char label, Term t) {
  if (label != 'P' && label != 'K')
    throw DomainError(std::string("unknown predicate label '") + label + "'");
  Node n{};
  n.kind = FormulaKind::CodePred;
  n.label = label;
  n.term = std::move(t);
  return make(std::move(n));
}

Formula Formula::know(std::string agent, Formula body) {
  if (agent.empty() ||
      !std::all_of(agent.begin(), agent.end(),
                   [](unsigned char c) { return std::isalnum(c) != 0; }))
    throw DomainError("agent ids are non-empty and alphanumeric: '" + agent +
                      "'");
  Node n{};
  n.kind = FormulaKind::Know;
  n.agent = std::move(agent);
  n.kids.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::negate(Formula f) {
  Node n{};
  n.kind = FormulaKind::Not;
  n.kids.push_back(std::move(f));
  return make(std::move(n));
}

Formula Formula::binary(FormulaKind kind, Formula a, Formula b) {
  if (!is_binary(kind)) throw std::logic_error("not a binary connective");
  Node n{};
  n.kind = kind;
  n.kids.push_back(std::move(a));
  n.kids.push_back(std::move(b));
  return make(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  return binary(FormulaKind::And, std::move(a), std::move(b));
}
Formula Formula::disj(Formula a, Formula b) {
  return binary(FormulaKind::Or, std::move(a), std::move(b));
}
Formula Formula::exor(Formula a, Formula b) {
  return binary(FormulaKind::Xor, std::move(a), std::move(b));
}
Formula Formula::implies(Formula a, Formula b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}
Formula Formula::iff(Formula a, Formula b) {
  return binary(FormulaKind::Iff, std::move(a), std::move(b));
}

const Term& Formula::term() const {
  if (!node_->term) throw std::logic_error("formula has no term");
  return *node_->term;
}
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size ||
      a.day != b.day || a.label != b.label || a.agent != b.agent)
    return false;
  if (a.term && !(*a.term == *b.term)) return false;
  return std::equal(a.kids.begin(), a.kids.end(), b.kids.begin());
}

Formula chain(FormulaKind kind, const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::logic_error("empty chain");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = Formula::binary(kind, acc, parts[i]);
  return acc;
}

Formula conj_all(const std::vector<Formula>& parts) {
  return chain(FormulaKind::And, parts);
}

Formula curry(const std::vector<Formula>& antecedents, Formula consequent) {
  Formula acc = std::move(consequent);
  for (auto it = antecedents.rbegin(); it != antecedents.rend(); ++it)
    acc = Formula::implies(*it, acc);
  return acc;
}

//------------------------------------------------------------------------------
// Env

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool reserved_lower(std::string_view s) {
  return s == "x" || s == "xor" || s == "false";
}

}  // namespace

bool Env::valid_numeral_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  if (!std::all_of(name.begin(), name.end(), ident_char)) return false;
  return !reserved_lower(name);
}

bool Env::valid_formula_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    return false;
  if (name[0] == 'K' || name[0] == 'Q' || name[0] == 'P') return false;
  static constexpr std::string_view kTermWords[] = {"D", "Neg", "Conj", "Imp"};
  for (auto w : kTermWords)
    if (name == w) return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

void Env::bind_numeral(std::string name, Natural value) {
  if (!valid_numeral_name(name))
    throw DomainError("invalid numeral name '" + name + "'");
  if (numeral(name) || formula(name))
    throw DomainError("name '" + name + "' bound twice");
  bindings_.push_back({std::move(name), std::move(value)});
}

void Env::bind_formula(std::string name, Formula value) {
  if (!valid_formula_name(name))
    throw DomainError("invalid formula name '" + name + "'");
  if (numeral(name) || formula(name))
    throw DomainError("name '" + name + "' bound twice");
  bindings_.push_back({std::move(name), std::move(value)});
}

const Natural* Env::numeral(std::string_view name) const {
  for (const Binding& b : bindings_)
    if (b.name == name) return std::get_if<Natural>(&b.value);
  return nullptr;
}

const Formula* Env::formula(std::string_view name) const {
  for (const Binding& b : bindings_)
    if (b.name == name) return std::get_if<Formula>(&b.value);
  return nullptr;
}

const std::string* Env::name_of(const Natural& v, std::size_t limit) const {
  const std::size_t n = std::min(limit, bindings_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto* p = std::get_if<Natural>(&bindings_[i].value); p && *p == v)
      return &bindings_[i].name;
  return nullptr;
}

const std::string* Env::name_of(const Formula& f, std::size_t limit) const {
  const std::size_t n = std::min(limit, bindings_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto* p = std::get_if<Formula>(&bindings_[i].value); p && *p == f)
      return &bindings_[i].name;
  return nullptr;
}

Env Env::prefix(std::size_t n) const {
  Env e;
  e.bindings_.assign(bindings_.begin(),
                     bindings_.begin() + std::min(n, bindings_.size()));
  return e;
}

//------------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Env& env) : s_(text), env_(env) {}

  Formula formula_eof() {
    Formula f = iff();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

  Term term_eof() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(pos_, msg);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw SyntaxError(at, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  // Identifier at the cursor without consuming it.
  std::string_view peek_ident() {
    skip();
    std::size_t e = pos_;
    while (e < s_.size() && ident_char(s_[e])) ++e;
    return s_.substr(pos_, e - pos_);
  }

  bool eat_word(std::string_view w) {
    if (peek_ident() != w) return false;
    pos_ += w.size();
    return true;
  }

  std::string_view digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(b, pos_ - b);
  }

  // Formulas ------------------------------------------------------------------

  Formula iff() {
    Formula a = imp();
    if (eat("<->")) return Formula::iff(a, imp());
    return a;
  }

  Formula imp() {
    Formula a = disj();
    if (eat("->")) return Formula::implies(a, imp());
    return a;
  }

  Formula disj() {
    Formula a = conj();
    for (;;) {
      if (eat("|")) {
        a = Formula::disj(a, conj());
      } else if (eat_word("xor")) {
        a = Formula::exor(a, conj());
      } else {
        return a;
      }
    }
  }

  Formula conj() {
    Formula a = unary();
    while (eat("&")) a = Formula::conj(a, unary());
    return a;
  }

  Formula day_atom(std::size_t at, std::string_view ds) {
    if (pos_ < s_.size() && ident_char(s_[pos_]))
      fail("malformed day atom");
    if (ds.size() > 9) fail_at(at, "day index too large");
    const auto k = static_cast<std::uint32_t>(std::stoul(std::string(ds)));
    if (k == 0) fail_at(at, "day index 0");
    return Formula::day(k);
  }

  Formula unary() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::negate(unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = iff();
      expect(")");
      return f;
    }
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) return day_atom(at, digits());
    if (c == '\0') fail("unexpected end of input");

    const std::string_view id = peek_ident();
    if (id.empty()) fail(std::string("unexpected character '") + c + "'");
    if (id == "false") {
      pos_ += id.size();
      return Formula::falsum();
    }
    if ((id == "P" || id == "K") && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
      pos_ += 2;
      Term t = term();
      expect("]");
      return Formula::pred(id[0], std::move(t));
    }
    if (id[0] == 'K' && id.size() > 1) {
      if (id.find('_') != std::string_view::npos)
        fail("agent ids are alphanumeric");
      pos_ += id.size();
      return Formula::know(std::string(id.substr(1)), unary());
    }
    if (id[0] == 'Q' && id.size() > 1 &&
        std::all_of(id.begin() + 1, id.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      ++pos_;
      return day_atom(at, digits());
    }
    if (std::isupper(static_cast<unsigned char>(id[0]))) {
      pos_ += id.size();
      if (pos_ < s_.size() && s_[pos_] == '[')
        fail_at(at, "unknown predicate label '" + std::string(id) + "'");
      if (const Formula* f = env_.formula(id)) return *f;
      fail_at(at, "unknown formula name '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(id) + "'");
  }

  // Terms ---------------------------------------------------------------------

  Term term() {
    Term a = tconj();
    if (eat_word("Imp")) return Term::imp(a, term());
    return a;
  }

  Term tconj() {
    Term a = tunary();
    while (eat_word("Conj")) a = Term::conj(a, tunary());
    return a;
  }

  Term tunary() {
    if (eat_word("Neg")) return Term::neg(tunary());
    return tprimary();
  }

  Term pair(Term (*ctor)(Term, Term)) {
    expect("(");
    Term a = term();
    expect(",");
    Term b = term();
    expect(")");
    return ctor(std::move(a), std::move(b));
  }

  Term tprimary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Term t = term();
      expect(")");
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string_view ds = digits();
      if (pos_ < s_.size() && ident_char(s_[pos_])) fail("malformed numeral");
      return Term::numeral(Natural(std::string(ds), 10));
    }
    const std::string_view id = peek_ident();
    if (id.empty()) {
      if (c == '\0') fail("unexpected end of input");
      fail(std::string("unexpected character '") + c + "' in term");
    }
    pos_ += id.size();
    if (id == "x") return Term::var();
    if (id == "D") return pair(&Term::diag);
    if (id == "Conj") return pair(&Term::conj);
    if (id == "Imp") return pair(&Term::imp);
    if (const Natural* n = env_.numeral(id)) return Term::numeral(*n);
    fail_at(at, "unknown numeral name '" + std::string(id) + "'");
  }

  std::string_view s_;
  const Env& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Env& env) {
  return Parser(text, env).formula_eof();
}

Term parse_term(std::string_view text, const Env& env) {
  return Parser(text, env).term_eof();
}

//------------------------------------------------------------------------------
// Printer

namespace {

bool binary_term(const Term& t) {
  return t.kind() == TermKind::Conj || t.kind() == TermKind::Imp;
}

void print_term(const Term& t, const PrintOptions& o, std::string& out) {
  auto child = [&](const Term& c, bool left_chain) {
    const bool paren = binary_term(c) && !left_chain;
    if (paren) out += '(';
    print_term(c, o, out);
    if (paren) out += ')';
  };
  switch (t.kind()) {
    case TermKind::Numeral:
      if (o.env)
        if (const std::string* n = o.env->name_of(t.value(), o.env_limit)) {
          out += *n;
          return;
        }
      out += t.value().get_str(10);
      return;
    case TermKind::Var:
      out += 'x';
      return;
    case TermKind::Neg:
      if (binary_term(t.lhs())) {
        out += "Neg";
        child(t.lhs(), false);
      } else {
        out += "Neg ";
        child(t.lhs(), false);
      }
      return;
    case TermKind::Diag:
      out += "D(";
      print_term(t.lhs(), o, out);
      out += ',';
      print_term(t.rhs(), o, out);
      out += ')';
      return;
    case TermKind::Conj:
      child(t.lhs(), t.lhs().kind() == TermKind::Conj);
      out += " Conj ";
      child(t.rhs(), false);
      return;
    case TermKind::Imp:
      child(t.lhs(), false);
      out += " Imp ";
      child(t.rhs(), false);
      return;
  }
}

const char* op_text(FormulaKind k) {
  switch (k) {
    case FormulaKind::And: return " & ";
    case FormulaKind::Or: return " | ";
    case FormulaKind::Xor: return " xor ";
    case FormulaKind::Implies: return " -> ";
    case FormulaKind::Iff: return " <-> ";
    default: return "?";
  }
}

bool chains_left(FormulaKind k) {
  return k == FormulaKind::And || k == FormulaKind::Or || k == FormulaKind::Xor;
}

void print_formula(const Formula& f, const PrintOptions& o, std::string& out);

void print_operand(const Formula& c, bool no_paren, const PrintOptions& o,
                   std::string& out) {
  bool paren = is_binary(c.kind()) && !no_paren;
  // A bound name prints atomically.
  if (paren && o.env && o.env->name_of(c, o.env_limit)) paren = false;
  if (paren) out += '(';
  print_formula(c, o, out);
  if (paren) out += ')';
}

void print_formula(const Formula& f, const PrintOptions& o, std::string& out) {
  if (o.env && f.size() > 1)
    if (const std::string* n = o.env->name_of(f, o.env_limit)) {
      out += *n;
      return;
    }
  switch (f.kind()) {
    case FormulaKind::Falsum:
      out += "false";
      return;
    case FormulaKind::Day:
      if (o.days == DayStyle::Q) out += 'Q';
      out += std::to_string(f.day_index());
      return;
    case FormulaKind::CodePred:
      out += f.label();
      out += '[';
      print_term(f.term(), o, out);
      out += ']';
      return;
    case FormulaKind::Know:
      out += 'K';
      out += f.agent();
      out += ' ';
      print_operand(f.lhs(), false, o, out);
      return;
    case FormulaKind::Not:
      out += '~';
      print_operand(f.lhs(), false, o, out);
      return;
    default:
      break;
  }
  const bool left_chain = chains_left(f.kind()) && f.lhs().kind() == f.kind();
  print_operand(f.lhs(), left_chain, o, out);
  out += op_text(f.kind());
  print_operand(f.rhs(), false, o, out);
}

}  // namespace

std::string print(const Formula& f, const PrintOptions& opts) {
  std::string out;
  print_formula(f, opts, out);
  return out;
}

std::string print(const Term& t, const PrintOptions& opts) {
  std::string out;
  print_term(t, opts, out);
  return out;
}

//------------------------------------------------------------------------------
// Substitution

Term substitute(const Term& t, const Natural& n) {
  if (t.closed()) return t;
  switch (t.kind()) {
    case TermKind::Var:
      return Term::numeral(n);
    case TermKind::Neg:
      return Term::neg(substitute(t.lhs(), n));
    case TermKind::Conj:
      return Term::conj(substitute(t.lhs(), n), substitute(t.rhs(), n));
    case TermKind::Imp:
      return Term::imp(substitute(t.lhs(), n), substitute(t.rhs(), n));
    case TermKind::Diag:
      return Term::diag(substitute(t.lhs(), n), substitute(t.rhs(), n));
    case TermKind::Numeral:
      break;
  }
  return t;
}

Formula substitute(const Formula& f, const Natural& n) {
  if (!f.has_var()) return f;
  switch (f.kind()) {
    case FormulaKind::CodePred:
      return Formula::pred(f.label(), substitute(f.term(), n));
    case FormulaKind::Know:
      return Formula::know(f.agent(), substitute(f.lhs(), n));
    case FormulaKind::Not:
      return Formula::negate(substitute(f.lhs(), n));
    default:
      break;
  }
  if (is_binary(f.kind()))
    return Formula::binary(f.kind(), substitute(f.lhs(), n),
                           substitute(f.rhs(), n));
  return f;
}

namespace {

std::size_t max_digits(const Term& t) {
  if (t.kind() == TermKind::Numeral) return t.value().get_str(10).size();
  if (t.kind() == TermKind::Var) return 0;
  std::size_t m = max_digits(t.lhs());
  if (t.kind() != TermKind::Neg) m = std::max(m, max_digits(t.rhs()));
  return m;
}

}  // namespace

std::size_t max_numeral_digits(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::CodePred:
      return max_digits(f.term());
    case FormulaKind::Know:
    case FormulaKind::Not:
      return max_numeral_digits(f.lhs());
    default:
      break;
  }
  if (is_binary(f.kind()))
    return std::max(max_numeral_digits(f.lhs()), max_numeral_digits(f.rhs()));
  return 0;
}

}  // namespace sxlab
