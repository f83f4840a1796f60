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

// Surprise-maximising exam schedules.
//
// q_n is the probability of the exam on the n-th-to-last day given that it
// has not happened yet (q_0 = 1), so day k of an m-day week has hazard
// q_{m-k}. The surprise of an exam on day k is ln q_{m-k}, and s_n is the
// expected surprise over the last n+1 days:
//
//   s_0 = 0,  s_n = q_n ln q_n + (1 - q_n) s_{n-1}.
//
// The maximiser of |s_n| is q_n = exp(s_{n-1} - 1), at which
// s_n = s_{n-1} - q_n.

#ifndef SXLAB_SURPRISE_HPP
#define SXLAB_SURPRISE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sxlab {

struct HazardSchedule {
  std::uint32_t m = 0;
  std::vector<double> q;  // q_0 .. q_{m-1}
  std::vector<double> s;  // s_0 .. s_{m-1}
  std::vector<double> p;  // p_1 .. p_m (stored from index 0)

  /// Hazard of day k, 1 <= k <= m.
  double hazard(std::uint32_t k) const { return q.at(m - k); }
  /// p_1 + ... + p_k.
  double cumulative(std::uint32_t k) const;
};

/// Throws DomainError for m = 0.
HazardSchedule narveson(std::uint32_t m);

/// The schedule with the given day probabilities. Days that cannot be
/// reached get hazard 1. Throws DomainError unless p is a distribution.
HazardSchedule from_distribution(const std::vector<double>& p);

/// Sum of p_k ln(hazard of day k), summed day by day. Throws DomainError
/// when a reachable day has hazard 0.
double expected_surprise(const HazardSchedule& h);
double expected_surprise(const std::vector<double>& p);

struct OracleConfig {
  double coarse_step = 1e-2;
  int rounds = 3;  // each round refines the step tenfold
  std::uint64_t seed = 20260101;
  int perturbations = 2000;
  double perturbation_scale = 1e-3;
};

struct OracleResult {
  std::vector<double> p;
  std::vector<double> q;  // hazards q_0 .. q_{m-1}
  double value = 0;
  /// Largest improvement of |value| found by random perturbation of p.
  double best_perturbation_gain = 0;
  bool perturbation_ok = true;
};

/// Maximises |expected surprise| by hazard-wise grid search, last day
/// first, with every tail value summed directly; then perturbs the whole
/// vector at random. Throws DomainError for m = 0 or m > 8.
OracleResult oracle_maximize(std::uint32_t m, const OracleConfig& config = {});

struct SuffixReport {
  std::uint32_t m = 0;
  bool ok = true;
  std::optional<std::uint32_t> recursion_mismatch;  // first offending index
  std::optional<std::uint32_t> oracle_mismatch;
  double max_oracle_difference = 0;
  std::string to_string() const;
};

/// Compares m and m+1 on the shared hazards q_0 .. q_{m-1}. Throws
/// DomainError for m < 2.
SuffixReport suffix_invariance_check(std::uint32_t m, const OracleConfig& config = {});

}  // namespace sxlab

#endif  // SXLAB_SURPRISE_HPP
