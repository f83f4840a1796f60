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

// Goedel numbering.
//
// A formula is serialized in prefix form over a small ASCII alphabet and
// the byte string, read big-endian, is its code:
//
//   formula  F            Falsum
//            Q<digits>.   day atom
//            P<term>      code predicate P    K<term>   code predicate K
//            ~<f>         &<f><f>  |<f><f>  ^<f><f>  ><f><f>  =<f><f>
//   term     #<digits>.   numeral (decimal)   x         the free variable
//            N<t>         C<t><t>  I<t><t>  D<t><t>
//
// Every serialization starts with a printable byte, so codes and byte
// strings are in bijection on the image. Numerals are embedded as decimal
// digit strings, so code length is linear in the printed size of the
// formula. With this layout the code-level connectives are concatenations:
//
//   neg_code(c)        = '~' . c
//   conj_code(c1, c2)  = '&' . c1 . c2
//   imp_code(c1, c2)   = '>' . c1 . c2
//
// Proofs are coded with the same alphabet behind a leading 'p' (see
// proof_code), which no formula serialization starts with.

#ifndef SXLAB_GODEL_HPP
#define SXLAB_GODEL_HPP

#include <string>
#include <string_view>

#include "sxlab/formula.hpp"
#include "sxlab/proof.hpp"

namespace sxlab {

/// A Goedel number. Thin value wrapper so codes do not mix with plain
/// numerals in signatures.
class Code {
 public:
  Code() = default;
  explicit Code(Natural v);

  const Natural& value() const { return value_; }
  std::string decimal() const { return value_.get_str(10); }

  /// Big-endian bytes, no leading zero byte; empty for 0.
  std::string bytes() const;
  static Code from_bytes(std::string_view bytes);

  bool operator==(const Code& o) const { return value_ == o.value_; }
  bool operator!=(const Code& o) const { return value_ != o.value_; }

 private:
  Natural value_;
};

/// Throws DomainError when f contains a knowledge operator.
Code encode(const Formula& f);
/// Throws DomainError("not a valid code") outside the image of encode.
Formula decode(const Code& c);
bool is_formula_code(const Code& c);

/// The byte string behind encode(f).
std::string serialize(const Formula& f);
Formula deserialize(std::string_view bytes);

Code neg_code(const Code& c);
Code conj_code(const Code& a, const Code& b);
Code imp_code(const Code& a, const Code& b);

/// Code of the formula coded by m with its free variable replaced by the
/// numeral n.
Code diag(const Code& m, const Natural& n);

/// Value of a closed term; throws DomainError on an open term.
Code eval_term(const Term& t);

struct RuleSet;

/// Code of a proof in the self-reference fragment.
Code proof_code(const Proof& p);
Proof decode_proof(const Code& c);

/// The proof relation: i codes a proof that the kernel accepts under `rules`
/// and whose conclusion is coded by j. Never throws on malformed i.
bool check_proof_code(const Code& i, const Code& j);
bool check_proof_code(const Code& i, const Code& j, const RuleSet& rules);

/// Display form for large codes: leading and trailing digits, digit count
/// and a SHA-256 prefix of the decimal string. Short codes print in full.
std::string abbreviate(const Natural& n);
std::string sha256_hex(std::string_view data);

}  // namespace sxlab

#endif  // SXLAB_GODEL_HPP
