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

#include "sxlab/games.hpp"

#include <cctype>

#include "sxlab/formula.hpp"

namespace sxlab {

namespace {

constexpr std::uint32_t kMaxRounds = 10;

int digit(const JointAction& j) {
  return 2 * static_cast<int>(j.first) + static_cast<int>(j.second);
}

JointAction joint(int d) {
  return {static_cast<Action>(d / 2), static_cast<Action>(d % 2)};
}

// First history number of length k.
std::uint64_t offset(std::uint32_t k) { return ((std::uint64_t{1} << (2 * k)) - 1) / 3; }

}  // namespace

char action_letter(Action a) { return a == Action::Cooperate ? 'C' : 'D'; }

void PayoffMatrix::validate() const {
  if (!(T > R && R > P && P > S)) throw DomainError("not a prisoner's dilemma");
}

PayoffPair PayoffMatrix::stage(Action a1, Action a2) const {
  if (a1 == Action::Cooperate)
    return a2 == Action::Cooperate ? PayoffPair{R, R} : PayoffPair{S, T};
  return a2 == Action::Cooperate ? PayoffPair{T, S} : PayoffPair{P, P};
}

Payoff parse_rational(std::string_view text) {
  std::string s(text);
  const auto bad = [&] { return DomainError("malformed payoff '" + s + "'"); };
  if (s.empty()) throw bad();
  std::string digits = s;
  std::string scale = "1";
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    digits = s.substr(0, dot) + frac;
    scale = "1" + std::string(frac.size(), '0');
    if (digits == "-" || digits == "+" || s.substr(0, dot).empty()) throw bad();
  } else if (const auto slash = s.find('/'); slash != std::string::npos) {
    digits = s.substr(0, slash);
    scale = s.substr(slash + 1);
  }
  const auto check_int = [&](const std::string& t, bool sign_ok) {
    std::size_t i = (sign_ok && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
  };
  check_int(digits, true);
  check_int(scale, false);
  mpz_class num(digits[0] == '+' ? digits.substr(1) : digits, 10);
  mpz_class den(scale, 10);
  if (den == 0) throw bad();
  Payoff q(num, den);
  q.canonicalize();
  return q;
}

PayoffMatrix PayoffMatrix::parse(std::string_view text) {
  std::vector<Payoff> v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    v.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw DomainError("expected four payoffs T,R,P,S");
  PayoffMatrix pm{v[0], v[1], v[2], v[3]};
  pm.validate();
  return pm;
}

std::string PayoffMatrix::to_string() const {
  return T.get_str() + "," + R.get_str() + "," + P.get_str() + "," + S.get_str();
}

std::uint64_t history_count(std::uint32_t n) { return offset(n); }

std::uint64_t history_index(const History& h) {
  std::uint64_t v = 0;
  for (const JointAction& j : h) v = 4 * v + static_cast<std::uint64_t>(digit(j));
  return offset(static_cast<std::uint32_t>(h.size())) + v;
}

History history_at(std::uint64_t index) {
  std::uint32_t k = 0;
  while (offset(k + 1) <= index) ++k;
  std::uint64_t v = index - offset(k);
  History h(k);
  for (std::uint32_t i = k; i-- > 0;) {
    h[i] = joint(static_cast<int>(v % 4));
    v /= 4;
  }
  return h;
}

std::string history_string(const History& h) {
  if (h.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += action_letter(h[i].first);
    out += action_letter(h[i].second);
  }
  return out;
}

StrategyProfile StrategyProfile::uniform(std::uint32_t n, Action a1, Action a2) {
  StrategyProfile sp;
  sp.n = n;
  sp.moves[0].assign(history_count(n), a1);
  sp.moves[1].assign(history_count(n), a2);
  return sp;
}

Action StrategyProfile::move(int player, const History& h) const {
  return moves.at(static_cast<std::size_t>(player)).at(history_index(h));
}

History StrategyProfile::path() const {
  History h;
  for (std::uint32_t r = 0; r < n; ++r) h.emplace_back(move(0, h), move(1, h));
  return h;
}

bool StrategyProfile::all_defect() const {
  for (const auto& side : moves)
    for (Action a : side)
      if (a != Action::Defect) return false;
  return true;
}

PayoffPair payoff_of(const StrategyProfile& profile, const PayoffMatrix& pm) {
  PayoffPair total{0, 0};
  for (const JointAction& j : profile.path()) {
    const PayoffPair s = pm.stage(j.first, j.second);
    total.first += s.first;
    total.second += s.second;
  }
  return total;
}

namespace {

// Backward induction over every history. V is an exact number type: either
// Payoff itself or int64 payoffs scaled by a common denominator.
template <typename V>
std::pair<V, V> induct(std::uint32_t n, const std::array<std::pair<V, V>, 4>& stage,
                       StrategyProfile& profile) {
  // Continuation values of the histories one level deeper.
  std::vector<std::pair<V, V>> next(std::size_t{1} << (2 * n), {V(0), V(0)});
  for (std::uint32_t k = n; k-- > 0;) {
    const std::uint64_t width = std::uint64_t{1} << (2 * k);
    std::vector<std::pair<V, V>> here(width);
    for (std::uint64_t v = 0; v < width; ++v) {
      std::array<std::pair<V, V>, 4> cell;
      for (int d = 0; d < 4; ++d) {
        const auto& c = next[4 * v + static_cast<std::uint64_t>(d)];
        cell[d] = {stage[d].first + c.first, stage[d].second + c.second};
      }
      int chosen = -1;
      for (int d = 0; d < 4; ++d) {
        const int other1 = d ^ 2;  // row player switches
        const int other2 = d ^ 1;  // column player switches
        if (cell[d].first >= cell[other1].first && cell[d].second >= cell[other2].second) {
          if (chosen >= 0) throw DomainError("stage game has several pure equilibria");
          chosen = d;
        }
      }
      if (chosen < 0) throw DomainError("stage game has no pure equilibrium");
      const JointAction j = joint(chosen);
      profile.moves[0][offset(k) + v] = j.first;
      profile.moves[1][offset(k) + v] = j.second;
      here[v] = std::move(cell[chosen]);
    }
    next = std::move(here);
  }
  return next[0];
}

}  // namespace

SpeResult solve_spe(std::uint32_t n, const PayoffMatrix& pm) {
  if (n == 0) throw DomainError("at least one round is needed");
  if (n > kMaxRounds)
    throw DomainError("at most " + std::to_string(kMaxRounds) + " rounds are supported");
  pm.validate();

  SpeResult out;
  out.profile.n = n;
  out.profile.moves[0].assign(history_count(n), Action::Defect);
  out.profile.moves[1].assign(history_count(n), Action::Defect);

  std::array<PayoffPair, 4> stage;
  for (int d = 0; d < 4; ++d) stage[d] = pm.stage(joint(d).first, joint(d).second);

  mpz_class den = 1;
  for (const Payoff& x : {pm.T, pm.R, pm.P, pm.S})
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class bound = 0;
  for (const Payoff& x : {pm.T, pm.R, pm.P, pm.S}) {
    const mpz_class scaled = abs(x.get_num() * (den / x.get_den()));
    if (scaled > bound) bound = scaled;
  }
  if (bound * n < mpz_class(1) << 62 && den.fits_slong_p()) {
    std::array<std::pair<std::int64_t, std::int64_t>, 4> ints;
    const auto scale = [&](const Payoff& x) {
      return mpz_class(x.get_num() * (den / x.get_den())).get_si();
    };
    for (int d = 0; d < 4; ++d) ints[d] = {scale(stage[d].first), scale(stage[d].second)};
    const auto v = induct(n, ints, out.profile);
    out.value = {Payoff(mpz_class(v.first), den), Payoff(mpz_class(v.second), den)};
    out.value.first.canonicalize();
    out.value.second.canonicalize();
  } else {
    out.value = induct(n, stage, out.profile);
  }
  return out;
}

std::vector<Equilibrium> enumerate_pure_nash(std::uint32_t n, const PayoffMatrix& pm) {
  if (n < 1 || n > 2) throw DomainError("exhaustive enumeration supports 1 or 2 rounds");
  pm.validate();
  const std::uint64_t hs = history_count(n);
  const std::uint32_t count = 1u << hs;

  const auto strategy = [&](std::uint32_t bits) {
    std::vector<Action> s(hs);
    for (std::uint64_t i = 0; i < hs; ++i)
      s[i] = ((bits >> i) & 1u) ? Action::Defect : Action::Cooperate;
    return s;
  };
  std::vector<std::vector<Action>> strategies;
  for (std::uint32_t b = 0; b < count; ++b) strategies.push_back(strategy(b));

  std::vector<std::vector<PayoffPair>> table(count, std::vector<PayoffPair>(count));
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      StrategyProfile sp;
      sp.n = n;
      sp.moves = {strategies[a], strategies[b]};
      table[a][b] = payoff_of(sp, pm);
    }

  std::vector<Equilibrium> out;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      bool stable = true;
      for (std::uint32_t d = 0; d < count && stable; ++d)
        stable = table[d][b].first <= table[a][b].first &&
                 table[a][d].second <= table[a][b].second;
      if (!stable) continue;
      Equilibrium e;
      e.profile.n = n;
      e.profile.moves = {strategies[a], strategies[b]};
      e.path = e.profile.path();
      e.value = table[a][b];
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace sxlab
