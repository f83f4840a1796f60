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

// Random terms and formulas for property tests.

#ifndef SXLAB_TESTS_GEN_HPP
#define SXLAB_TESTS_GEN_HPP

#include <random>
#include <string>

#include "sxlab/formula.hpp"

namespace sxlab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Natural numeral() {
    switch (below(4)) {
      case 0: return Natural(below(10));
      case 1: return Natural(below(1000000));
      default: {
        std::string d(1, static_cast<char>('1' + below(9)));
        const int len = 1 + below(60);
        for (int i = 0; i < len; ++i) d += static_cast<char>('0' + below(10));
        return Natural(d, 10);
      }
    }
  }

  Term term(int depth, bool allow_var = true) {
    if (depth <= 0 || below(3) == 0) {
      if (allow_var && below(3) == 0) return Term::var();
      return Term::numeral(numeral());
    }
    switch (below(4)) {
      case 0: return Term::neg(term(depth - 1, allow_var));
      case 1: return Term::conj(term(depth - 1, allow_var), term(depth - 1, allow_var));
      case 2: return Term::imp(term(depth - 1, allow_var), term(depth - 1, allow_var));
      default: return Term::diag(term(depth - 1, allow_var), term(depth - 1, allow_var));
    }
  }

  /// Formulas with day atoms, code predicates, falsum and all connectives;
  /// knowledge operators only when `know` is set.
  Formula formula(int depth, bool know = false, bool allow_var = true) {
    if (depth <= 0 || below(4) == 0) {
      switch (below(know ? 4 : 3)) {
        case 0: return Formula::day(1 + static_cast<std::uint32_t>(below(6)));
        case 1: return Formula::pred(below(2) ? 'P' : 'K', term(3, allow_var));
        case 2: return below(5) == 0 ? Formula::falsum() : Formula::day(1);
        default: {
          static const char* agents[] = {"a", "b", "1", "Art", "x2"};
          return Formula::know(agents[below(5)], Formula::day(1 + below(3)));
        }
      }
    }
    static const FormulaKind bins[] = {FormulaKind::And, FormulaKind::Or,
                                       FormulaKind::Xor, FormulaKind::Implies,
                                       FormulaKind::Iff};
    const int pick = below(know ? 7 : 6);
    if (pick == 5) return Formula::negate(formula(depth - 1, know, allow_var));
    if (pick == 6) {
      static const char* agents[] = {"a", "b", "3", "Eric"};
      return Formula::know(agents[below(4)], formula(depth - 1, know, allow_var));
    }
    return Formula::binary(bins[pick], formula(depth - 1, know, allow_var),
                           formula(depth - 1, know, allow_var));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sxlab::testing

#endif  // SXLAB_TESTS_GEN_HPP
