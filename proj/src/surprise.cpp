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

#include "sxlab/surprise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sxlab/formula.hpp"

namespace sxlab {

namespace {

constexpr double kMassTolerance = 1e-9;

// p from hazards q_0..q_{m-1}.
std::vector<double> days_from_hazards(const std::vector<double>& q) {
  const std::size_t m = q.size();
  std::vector<double> p(m);
  double alive = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    const double h = q[m - k];
    p[k - 1] = alive * h;
    alive *= 1.0 - h;
  }
  return p;
}

// Expected surprise of the last n days under hazards q_0..q_{n-1}, summed
// over days rather than through the recursion.
double tail_value(const std::vector<double>& q, std::size_t n) {
  std::vector<double> tail(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(n));
  return expected_surprise(from_distribution(days_from_hazards(tail)));
}

}  // namespace

double HazardSchedule::cumulative(std::uint32_t k) const {
  // 1 minus the chance of no exam by day k; exactly 1 once a hazard is 1.
  double survive = 1.0;
  for (std::uint32_t d = 1; d <= k; ++d) survive *= 1.0 - hazard(d);
  return 1.0 - survive;
}

HazardSchedule narveson(std::uint32_t m) {
  if (m == 0) throw DomainError("a week has at least one day");
  HazardSchedule h;
  h.m = m;
  h.q = {1.0};
  h.s = {0.0};
  for (std::uint32_t n = 1; n < m; ++n) {
    h.q.push_back(std::exp(h.s.back() - 1.0));
    h.s.push_back(h.s.back() - h.q.back());
  }
  h.p = days_from_hazards(h.q);
  return h;
}

HazardSchedule from_distribution(const std::vector<double>& p) {
  if (p.empty()) throw DomainError("a week has at least one day");
  double total = 0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError("day probabilities must be non-negative");
    total += x;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw DomainError("day probabilities must sum to 1");

  HazardSchedule h;
  h.m = static_cast<std::uint32_t>(p.size());
  h.p = p;
  h.q.assign(h.m, 1.0);
  double alive = 1.0;
  for (std::uint32_t k = 1; k <= h.m; ++k) {
    double hz = 1.0;
    if (k < h.m && alive > kMassTolerance) hz = std::clamp(p[k - 1] / alive, 0.0, 1.0);
    h.q[h.m - k] = hz;
    alive -= p[k - 1];
  }
  h.s.assign(h.m, 0.0);
  for (std::uint32_t n = 1; n < h.m; ++n) {
    const double q = h.q[n];
    h.s[n] = (q > 0 ? q * std::log(q) : 0.0) + (1.0 - q) * h.s[n - 1];
  }
  return h;
}

double expected_surprise(const HazardSchedule& h) {
  double alive = 1.0;
  double total = 0.0;
  for (std::uint32_t k = 1; k <= h.m; ++k) {
    const double hz = h.hazard(k);
    if (alive > kMassTolerance && hz <= 0.0)
      throw DomainError("day " + std::to_string(k) + " is reachable but has hazard 0");
    const double pk = h.p[k - 1];
    if (pk > 0) total += pk * std::log(hz);
    alive -= pk;
  }
  return total;
}

double expected_surprise(const std::vector<double>& p) {
  return expected_surprise(from_distribution(p));
}

OracleResult oracle_maximize(std::uint32_t m, const OracleConfig& config) {
  if (m == 0) throw DomainError("a week has at least one day");
  if (m > 8) throw DomainError("the oracle is limited to 8 days");

  OracleResult out;
  out.q = {1.0};
  for (std::uint32_t n = 1; n < m; ++n) {
    const double rest = tail_value(out.q, n);
    const auto objective = [&](double x) { return x * std::log(x) + (1.0 - x) * rest; };
    double step = config.coarse_step;
    double lo = step;
    double hi = 1.0;
    double best = 1.0;
    double best_val = objective(1.0);
    for (int r = 0; r < config.rounds; ++r) {
      const long count = std::lround((hi - lo) / step);
      for (long i = 0; i <= count; ++i) {
        const double x = std::min(1.0, lo + static_cast<double>(i) * step);
        if (x <= 0.0) continue;
        const double v = objective(x);
        if (v < best_val) {
          best_val = v;
          best = x;
        }
      }
      lo = std::max(step / 10.0, best - step);
      hi = std::min(1.0, best + step);
      step /= 10.0;
    }
    out.q.push_back(best);
  }
  out.p = days_from_hazards(out.q);
  out.value = expected_surprise(from_distribution(out.p));

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> noise(0.0, config.perturbation_scale);
  for (int t = 0; t < config.perturbations && m > 1; ++t) {
    std::vector<double> p = out.p;
    double total = 0;
    for (double& x : p) {
      x = std::max(1e-12, x + noise(rng));
      total += x;
    }
    for (double& x : p) x /= total;
    const double gain = std::abs(expected_surprise(p)) - std::abs(out.value);
    out.best_perturbation_gain = std::max(out.best_perturbation_gain, gain);
  }
  // A grid optimum may be beaten by at most the grid's resolution effect.
  out.perturbation_ok = out.best_perturbation_gain <= 1e-6;
  return out;
}

std::string SuffixReport::to_string() const {
  std::ostringstream os;
  os << "m=" << m << " vs m=" << m + 1 << ": " << (ok ? "ok" : "VIOLATION");
  if (recursion_mismatch) os << "; recursion differs at q_" << *recursion_mismatch;
  if (oracle_mismatch) os << "; oracle differs at q_" << *oracle_mismatch;
  os << "; max oracle difference " << max_oracle_difference;
  return os.str();
}

SuffixReport suffix_invariance_check(std::uint32_t m, const OracleConfig& config) {
  if (m < 2) throw DomainError("suffix comparison needs at least two days");
  SuffixReport r;
  r.m = m;
  const HazardSchedule a = narveson(m);
  const HazardSchedule b = narveson(m + 1);
  for (std::uint32_t i = 0; i < m; ++i)
    if (a.q[i] != b.q[i] && !r.recursion_mismatch) r.recursion_mismatch = i;
  if (m + 1 <= 8) {
    const OracleResult oa = oracle_maximize(m, config);
    const OracleResult ob = oracle_maximize(m + 1, config);
    for (std::uint32_t i = 0; i < m; ++i) {
      const double d = std::abs(oa.q[i] - ob.q[i]);
      r.max_oracle_difference = std::max(r.max_oracle_difference, d);
      if (d > 1e-3 && !r.oracle_mismatch) r.oracle_mismatch = i;
    }
  }
  r.ok = !r.recursion_mismatch && !r.oracle_mismatch;
  return r;
}

}  // namespace sxlab
