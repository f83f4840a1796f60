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

// Object language shared by every deduction module: code-valued terms,
// day atoms, code predicates and per-agent knowledge operators.
//
// Terms and formulas are immutable, structurally shared trees. Equality is
// structural; every node caches its hash so that comparing two large
// sentences (which may embed numerals with thousands of digits) rejects
// mismatches cheaply.

#ifndef SXLAB_FORMULA_HPP
#define SXLAB_FORMULA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sxlab {

using Natural = mpz_class;

/// Raised by parse() with the byte offset of the offending input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Domain precondition violated (bad day index, open term, invalid code...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//------------------------------------------------------------------------------
// Terms

enum class TermKind : std::uint8_t { Numeral, Var, Neg, Conj, Imp, Diag };

class Term {
 public:
  static Term numeral(Natural value);
  static Term numeral(unsigned long value) { return numeral(Natural(value)); }
  static Term var();
  static Term neg(Term t);
  static Term conj(Term a, Term b);
  static Term imp(Term a, Term b);
  static Term diag(Term a, Term b);

  TermKind kind() const { return node_->kind; }
  const Natural& value() const;  // Numeral only
  const Term& lhs() const;       // Neg operand, or left operand
  const Term& rhs() const;       // binary nodes only
  bool closed() const { return node_->closed; }
  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  struct Node {
    TermKind kind;
    Natural value;
    std::vector<Term> kids;
    bool closed;
    std::size_t hash;
    std::size_t size;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(TermKind kind, Natural value, std::vector<Term> kids);

  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Formulas

enum class FormulaKind : std::uint8_t {
  Falsum,
  Day,
  CodePred,
  Know,
  Not,
  And,
  Or,
  Xor,
  Implies,
  Iff,
};

bool is_binary(FormulaKind k);

class Formula {
 public:
  static Formula falsum();
  static Formula day(std::uint32_t k);
  /// label is a single upper-case letter, "P" or "K".
  static Formula pred(char label, Term t);
  static Formula know(std::string agent, Formula body);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula exor(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula binary(FormulaKind kind, Formula a, Formula b);

  FormulaKind kind() const { return node_->kind; }
  std::uint32_t day_index() const { return node_->day; }
  char label() const { return node_->label; }
  const std::string& agent() const { return node_->agent; }
  const Term& term() const;
  const Formula& lhs() const;  // Not/Know body, or left operand
  const Formula& rhs() const;

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }
  bool has_var() const { return node_->has_var; }
  bool has_know() const { return node_->has_know; }
  bool has_pred() const { return node_->has_pred; }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node {
    FormulaKind kind;
    std::uint32_t day = 0;
    char label = 0;
    std::string agent;
    std::optional<Term> term;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    std::size_t size = 1;
    bool has_var = false;
    bool has_know = false;
    bool has_pred = false;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Left-nested conjunction a1 & a2 & ... ; a single element is returned as is.
Formula conj_all(const std::vector<Formula>& parts);
/// Left-nested chain with the given binary connective.
Formula chain(FormulaKind kind, const std::vector<Formula>& parts);
/// a1 -> (a2 -> ... -> (an -> c)).
Formula curry(const std::vector<Formula>& antecedents, Formula consequent);

//------------------------------------------------------------------------------
// Names bound for display and parsing: lower-case names stand for numerals,
// capitalised names for whole formulas. Bindings are ordered; a binding may
// be printed using the ones before it.

struct Binding {
  std::string name;
  std::variant<Natural, Formula> value;
};

class Env {
 public:
  Env() = default;

  void bind_numeral(std::string name, Natural value);
  void bind_formula(std::string name, Formula value);

  const std::vector<Binding>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

  const Natural* numeral(std::string_view name) const;
  const Formula* formula(std::string_view name) const;
  /// First name bound to the value, among the first `limit` bindings.
  const std::string* name_of(const Natural& v, std::size_t limit) const;
  const std::string* name_of(const Formula& f, std::size_t limit) const;

  /// Bindings [0, n) only.
  Env prefix(std::size_t n) const;

  static bool valid_numeral_name(std::string_view name);
  static bool valid_formula_name(std::string_view name);

 private:
  std::vector<Binding> bindings_;
};

enum class DayStyle : std::uint8_t { Q, Bare };

struct PrintOptions {
  const Env* env = nullptr;
  DayStyle days = DayStyle::Q;
  // Formula names usable while printing are limited to the first
  // `env_limit` bindings (a "let" line may only refer backwards).
  std::size_t env_limit = static_cast<std::size_t>(-1);
};

Formula parse(std::string_view text, const Env& env = {});
Term parse_term(std::string_view text, const Env& env = {});

std::string print(const Formula& f, const PrintOptions& opts = {});
std::string print(const Term& t, const PrintOptions& opts = {});

/// Replaces every Var in every term by Numeral(n).
Formula substitute(const Formula& f, const Natural& n);
Term substitute(const Term& t, const Natural& n);

/// Largest decimal digit length among the numerals of f (0 if none).
std::size_t max_numeral_digits(const Formula& f);

}  // namespace sxlab

#endif  // SXLAB_FORMULA_HPP
