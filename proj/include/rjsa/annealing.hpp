// Copyright 2026 The rjsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RJSA_ANNEALING_HPP_
#define RJSA_ANNEALING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rjsa/basis.hpp"
#include "rjsa/criteria.hpp"
#include "rjsa/dataset.hpp"
#include "rjsa/moves.hpp"
#include "rjsa/region.hpp"

namespace rjsa {

enum class ScheduleKind { kGeometric, kLogarithmic };

std::string_view schedule_name(ScheduleKind kind);
ScheduleKind parse_schedule(std::string_view name);

/// Non-increasing temperature sequence bounded below by `floor`.
///   geometric:    max(t0 * gamma^i, floor)
///   logarithmic:  max(t0 / ln(i + e), floor)
struct CoolingSchedule {
  ScheduleKind kind = ScheduleKind::kGeometric;
  double t0 = 1.0;
  double gamma = 0.99;  // geometric only
  double floor = 0.01;

  /// Geometric from t0 = 1, with gamma chosen so the floor is reached after
  /// 80% of `iterations`.
  static CoolingSchedule for_iterations(std::size_t iterations, double floor = 0.01);
  /// T = 1 at every iteration; the chain is then the plain kernel.
  static CoolingSchedule constant_one() { return {ScheduleKind::kGeometric, 1.0, 0.5, 1.0}; }

  void validate() const;
};

double temperature(const CoolingSchedule& schedule, std::size_t i);

/// Outer simulated-annealing test between the current state and the kernel
/// output: accept with probability min{1, exp((1/T - 1) * (candidate - current))}.
/// A -inf candidate is always rejected.
bool annealed_accept(double log_post_candidate, double log_post_current, double temperature, Rng& rng);

struct TraceRecord {
  std::size_t iteration = 0;  // 1-based
  double temperature = 1.0;
  std::size_t k = 0;
  double log_post = 0.0;       // chain state after the outer step
  double best_log_post = 0.0;  // running maximum
  MoveKind move = MoveKind::kUpdate;
  bool inner_accepted = false;
  bool outer_accepted = false;
  double train_mse = 0.0;
  std::optional<double> test_mse;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct AnnealingConfig {
  CriterionKind criterion = CriterionKind::kMdl;
  BasisKind basis = BasisKind::cubic();
  DistanceMetric metric;
  std::size_t iterations = 500;
  std::optional<CoolingSchedule> schedule;  // default: for_iterations(iterations)
  MoveConfig moves;
  double birth_margin = 0.1;
  std::size_t initial_k = 1;
  bool track_test_mse = true;

  CoolingSchedule effective_schedule() const;
  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct FitResult {
  SamplerState map_state;
  std::size_t map_iteration = 0;  // 0 = the initial state
  Matrix coefficients;            // (1 + d + k) x c at the MAP state
  double train_mse = 0.0;
  std::optional<double> test_mse;
  std::vector<TraceRecord> trace;
  std::uint64_t seed = 0;
  BirthRegion region;
  double zeta = 0.0;
};

/// Runs one annealing chain on `train`, tracking the best state visited.
/// `test` is only used for the per-iteration and final test error.
/// Throws ConfigError for invalid settings and NumericalError when the
/// linear-only design of `train` is rank deficient or fits it exactly.
FitResult run_annealing(const Dataset& train, const Dataset* test, const AnnealingConfig& config,
                        std::uint64_t seed);

struct MultiStartResult {
  std::vector<FitResult> chains;  // chain s used seed + s
  std::size_t best = 0;           // highest MAP log posterior, lowest index on ties

  const FitResult& best_fit() const { return chains.at(best); }
};

/// Runs `chains` independent chains concurrently over the shared datasets.
MultiStartResult run_multistart(const Dataset& train, const Dataset* test, const AnnealingConfig& config,
                                std::uint64_t seed, std::size_t chains);

}  // namespace rjsa

#endif  // RJSA_ANNEALING_HPP_
