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

#include "sxlab/godel.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>

#include "sxlab/kernel.hpp"

namespace sxlab {

Code::Code(Natural v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("codes are natural numbers");
}

std::string Code::bytes() const {
  if (value_ == 0) return {};
  const std::size_t n = (mpz_sizeinbase(value_.get_mpz_t(), 2) + 7) / 8;
  std::string out(n, '\0');
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, value_.get_mpz_t());
  out.resize(written);
  return out;
}

Code Code::from_bytes(std::string_view bytes) {
  Natural v;
  if (!bytes.empty())
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return Code(std::move(v));
}

//------------------------------------------------------------------------------
// Serialization

namespace {

void put_digits(const Natural& n, char open, std::string& out) {
  out += open;
  out += n.get_str(10);
  out += '.';
}

void write_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Numeral:
      put_digits(t.value(), '#', out);
      return;
    case TermKind::Var:
      out += 'x';
      return;
    case TermKind::Neg:
      out += 'N';
      write_term(t.lhs(), out);
      return;
    case TermKind::Conj:
      out += 'C';
      break;
    case TermKind::Imp:
      out += 'I';
      break;
    case TermKind::Diag:
      out += 'D';
      break;
  }
  write_term(t.lhs(), out);
  write_term(t.rhs(), out);
}

char binary_tag(FormulaKind k) {
  switch (k) {
    case FormulaKind::And: return '&';
    case FormulaKind::Or: return '|';
    case FormulaKind::Xor: return '^';
    case FormulaKind::Implies: return '>';
    case FormulaKind::Iff: return '=';
    default: return '?';
  }
}

void write_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Falsum:
      out += 'F';
      return;
    case FormulaKind::Day:
      put_digits(Natural(f.day_index()), 'Q', out);
      return;
    case FormulaKind::CodePred:
      out += f.label();
      write_term(f.term(), out);
      return;
    case FormulaKind::Know:
      throw DomainError("cannot encode a knowledge operator (modal fragment)");
    case FormulaKind::Not:
      out += '~';
      write_formula(f.lhs(), out);
      return;
    default:
      out += binary_tag(f.kind());
      write_formula(f.lhs(), out);
      write_formula(f.rhs(), out);
      return;
  }
}

struct Invalid {};

// Total reader over a byte string: every malformation throws Invalid.
class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }

  char next() {
    if (pos_ >= s_.size()) throw Invalid{};
    return s_[pos_++];
  }

  void expect(char c) {
    if (next() != c) throw Invalid{};
  }

  // Canonical decimal digits terminated by '.'.
  std::string_view digits() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    const std::string_view d = s_.substr(b, pos_ - b);
    if (d.empty() || (d.size() > 1 && d[0] == '0')) throw Invalid{};
    expect('.');
    return d;
  }

  std::size_t small() {
    const std::string_view d = digits();
    if (d.size() > 9) throw Invalid{};
    return std::stoul(std::string(d));
  }

  Term term(int depth) {
    if (depth > kMaxDepth) throw Invalid{};
    switch (next()) {
      case '#':
        return Term::numeral(Natural(std::string(digits()), 10));
      case 'x':
        return Term::var();
      case 'N':
        return Term::neg(term(depth + 1));
      case 'C': {
        Term a = term(depth + 1);
        return Term::conj(std::move(a), term(depth + 1));
      }
      case 'I': {
        Term a = term(depth + 1);
        return Term::imp(std::move(a), term(depth + 1));
      }
      case 'D': {
        Term a = term(depth + 1);
        return Term::diag(std::move(a), term(depth + 1));
      }
      default:
        throw Invalid{};
    }
  }

  Formula formula(int depth) {
    if (depth > kMaxDepth) throw Invalid{};
    const char c = next();
    FormulaKind kind;
    switch (c) {
      case 'F':
        return Formula::falsum();
      case 'Q': {
        const std::size_t k = small();
        if (k == 0) throw Invalid{};
        return Formula::day(static_cast<std::uint32_t>(k));
      }
      case 'P':
      case 'K':
        return Formula::pred(c, term(depth + 1));
      case '~':
        return Formula::negate(formula(depth + 1));
      case '&': kind = FormulaKind::And; break;
      case '|': kind = FormulaKind::Or; break;
      case '^': kind = FormulaKind::Xor; break;
      case '>': kind = FormulaKind::Implies; break;
      case '=': kind = FormulaKind::Iff; break;
      default:
        throw Invalid{};
    }
    Formula a = formula(depth + 1);
    return Formula::binary(kind, std::move(a), formula(depth + 1));
  }

  std::string_view word() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != '.') ++pos_;
    const std::string_view w = s_.substr(b, pos_ - b);
    expect('.');
    return w;
  }

  Proof proof(int depth) {
    if (depth > kMaxDepth) throw Invalid{};
    expect('p');
    const std::size_t n = small();
    if (n == 0) throw Invalid{};
    Proof p;
    for (std::size_t i = 0; i < n; ++i) {
      Formula f = formula(0);
      expect('r');
      const auto rule = rule_from_name(word());
      if (!rule) throw Invalid{};
      Step s{std::move(f), *rule, {}, {}};
      const std::size_t np = small();
      for (std::size_t k = 0; k < np; ++k) s.premises.push_back(small());
      const std::size_t ns = small();
      for (std::size_t k = 0; k < ns; ++k) s.subproofs.push_back(proof(depth + 1));
      p.steps.push_back(std::move(s));
    }
    return p;
  }

 private:
  static constexpr int kMaxDepth = 4000;
  std::string_view s_;
  std::size_t pos_ = 0;
};

void write_count(std::size_t n, std::string& out) {
  out += std::to_string(n);
  out += '.';
}

void write_proof(const Proof& p, std::string& out) {
  out += 'p';
  write_count(p.steps.size(), out);
  for (const Step& s : p.steps) {
    write_formula(s.formula, out);
    out += 'r';
    out += rule_name(s.rule);
    out += '.';
    write_count(s.premises.size(), out);
    for (std::size_t id : s.premises) write_count(id, out);
    write_count(s.subproofs.size(), out);
    for (const Proof& sub : s.subproofs) write_proof(sub, out);
  }
}

}  // namespace

std::string serialize(const Formula& f) {
  std::string out;
  out.reserve(f.size() * 2);
  write_formula(f, out);
  return out;
}

Formula deserialize(std::string_view bytes) {
  try {
    Reader r(bytes);
    Formula f = r.formula(0);
    if (!r.done()) throw Invalid{};
    return f;
  } catch (const Invalid&) {
    throw DomainError("not a valid code");
  }
}

Code encode(const Formula& f) { return Code::from_bytes(serialize(f)); }

Formula decode(const Code& c) { return deserialize(c.bytes()); }

bool is_formula_code(const Code& c) {
  try {
    decode(c);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

namespace {

std::string checked_bytes(const Code& c) {
  std::string b = c.bytes();
  deserialize(b);
  return b;
}

}  // namespace

Code neg_code(const Code& c) { return Code::from_bytes("~" + checked_bytes(c)); }

Code conj_code(const Code& a, const Code& b) {
  return Code::from_bytes("&" + checked_bytes(a) + checked_bytes(b));
}

Code imp_code(const Code& a, const Code& b) {
  return Code::from_bytes(">" + checked_bytes(a) + checked_bytes(b));
}

Code diag(const Code& m, const Natural& n) {
  return encode(substitute(decode(m), n));
}

Code eval_term(const Term& t) {
  if (!t.closed()) throw DomainError("cannot evaluate an open term");
  switch (t.kind()) {
    case TermKind::Numeral:
      return Code(t.value());
    case TermKind::Neg:
      return neg_code(eval_term(t.lhs()));
    case TermKind::Conj:
      return conj_code(eval_term(t.lhs()), eval_term(t.rhs()));
    case TermKind::Imp:
      return imp_code(eval_term(t.lhs()), eval_term(t.rhs()));
    case TermKind::Diag:
      return diag(eval_term(t.lhs()), eval_term(t.rhs()).value());
    case TermKind::Var:
      break;
  }
  throw DomainError("cannot evaluate an open term");
}

Code proof_code(const Proof& p) {
  std::string out;
  write_proof(p, out);
  return Code::from_bytes(out);
}

Proof decode_proof(const Code& c) {
  try {
    const std::string b = c.bytes();
    Reader r(b);
    Proof p = r.proof(0);
    if (!r.done()) throw Invalid{};
    return p;
  } catch (const Invalid&) {
    throw DomainError("not a valid proof code");
  }
}

bool check_proof_code(const Code& i, const Code& j) {
  return check_proof_code(i, j, RuleSet::fitch());
}

bool check_proof_code(const Code& i, const Code& j, const RuleSet& rules) {
  try {
    const Proof p = decode_proof(i);
    if (!check(p, rules).accepted) return false;
    return encode(p.conclusion()) == j;
  } catch (const std::exception&) {
    return false;
  }
}

//------------------------------------------------------------------------------

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string abbreviate(const Natural& n) {
  const std::string d = n.get_str(10);
  if (d.size() <= 40) return d;
  return d.substr(0, 16) + "..." + d.substr(d.size() - 16) + " (" +
         std::to_string(d.size()) + " digits, sha256:" +
         sha256_hex(d).substr(0, 16) + ")";
}

}  // namespace sxlab
