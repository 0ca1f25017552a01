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

#include "rjsa/annealing.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "rjsa/data_io.hpp"
#include "rjsa/errors.hpp"
#include "rjsa/least_squares.hpp"

namespace rjsa {

std::string_view schedule_name(ScheduleKind kind) {
  return kind == ScheduleKind::kGeometric ? "geometric" : "logarithmic";
}

ScheduleKind parse_schedule(std::string_view name) {
  if (name == "geometric") return ScheduleKind::kGeometric;
  if (name == "logarithmic") return ScheduleKind::kLogarithmic;
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "' (expected geometric|logarithmic)");
}

CoolingSchedule CoolingSchedule::for_iterations(std::size_t iterations, double floor) {
  CoolingSchedule s;
  s.floor = floor;
  const double reach = 0.8 * static_cast<double>(iterations);
  s.gamma = reach >= 1.0 && floor < 1.0 ? std::pow(floor, 1.0 / reach) : 0.5;
  return s;
}

void CoolingSchedule::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw ConfigError("schedule: t0 must be positive");
  if (!(floor > 0.0) || !std::isfinite(floor)) throw ConfigError("schedule: t-floor must be positive");
  if (kind == ScheduleKind::kGeometric && !(gamma > 0.0 && gamma < 1.0)) {
    throw ConfigError("schedule: gamma must lie in (0, 1)");
  }
}

double temperature(const CoolingSchedule& schedule, std::size_t i) {
  const double step = static_cast<double>(i);
  double t = schedule.t0;
  if (schedule.kind == ScheduleKind::kGeometric) {
    t = schedule.t0 * std::pow(schedule.gamma, step);
  } else {
    t = schedule.t0 / std::log(step + std::exp(1.0));
  }
  return std::max(t, schedule.floor);
}

bool annealed_accept(double log_post_candidate, double log_post_current, double temperature, Rng& rng) {
  if (log_post_candidate == kNegInf || std::isnan(log_post_candidate)) return false;
  if (log_post_candidate == log_post_current) return true;
  const double log_accept = (1.0 / temperature - 1.0) * (log_post_candidate - log_post_current);
  if (log_accept >= 0.0) return true;
  return uniform01(rng) < std::exp(log_accept);
}

CoolingSchedule AnnealingConfig::effective_schedule() const {
  return schedule.value_or(CoolingSchedule::for_iterations(iterations));
}

void AnnealingConfig::validate() const {
  effective_schedule().validate();
  try {
    moves.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(birth_margin >= 0.0) || !std::isfinite(birth_margin)) throw ConfigError("birth-margin must be >= 0");
  if (initial_k > moves.kmax) throw ConfigError("initial-k must not exceed kmax");
}

namespace {

double mse_of_state(const Dataset& data, const Dataset& target, const CentreSet& centres,
                    const AnnealingConfig& config) {
  const auto sol = solve_least_squares(build_design_matrix(data, centres, config.basis, config.metric), data.y());
  if (sol.status != SolveStatus::kOk) return std::nan("");
  const Matrix pred = predict(centres, sol.coefficients, config.basis, target.x(), config.metric);
  return mean_squared_error(pred, target.y());
}

CentreSet initial_centres(const Dataset& train, std::size_t k0, Rng& rng) {
  // Distinct training inputs, so the initial design has no repeated columns.
  std::vector<std::size_t> rows(train.size());
  std::iota(rows.begin(), rows.end(), 0);
  CentreSet centres(train.input_dim());
  for (std::size_t j = 0; j < k0; ++j) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(j, rows.size() - 1)(rng);
    std::swap(rows[j], rows[pick]);
    centres.push_back(train.x().row(rows[j]));
  }
  return centres;
}

}  // namespace

FitResult run_annealing(const Dataset& train, const Dataset* test, const AnnealingConfig& config,
                        std::uint64_t seed) {
  config.validate();
  if (test != nullptr && (test->input_dim() != train.input_dim() || test->output_dim() != train.output_dim())) {
    throw ConfigError("test set dimensions differ from the training set");
  }
  if (config.initial_k > train.size()) throw ConfigError("initial-k exceeds the number of training samples");

  const Criterion crit = Criterion::for_dataset(config.criterion, train);
  const BirthRegion region = BirthRegion::around(train.x(), config.birth_margin);
  const PosteriorModel model(train, config.basis, crit, region, config.metric);
  const MoveContext ctx(model, config.moves);
  const CoolingSchedule schedule = config.effective_schedule();

  const auto linear_only = model.evaluate(CentreSet(train.input_dim()));
  if (linear_only.status == PosteriorStatus::kDegenerateDesign) {
    throw NumericalError("training inputs are degenerate: the constant-plus-linear design is rank deficient");
  }
  if (linear_only.status == PosteriorStatus::kZeroResidual) {
    throw NumericalError("training targets are fitted exactly by the linear model; the posterior is improper");
  }

  Rng rng(seed);
  SamplerState current = make_state(model, initial_centres(train, config.initial_k, rng));
  if (current.log_post == kNegInf) {
    throw NumericalError("initial state has zero posterior density (degenerate design or exact fit)");
  }
  SamplerState best = current;
  std::size_t best_iteration = 0;

  const double train_scale = 1.0 / static_cast<double>(train.size() * train.output_dim());
  const bool track_test = config.track_test_mse && test != nullptr;
  std::optional<double> current_test;
  if (track_test) current_test = mse_of_state(train, *test, current.centres, config);

  std::vector<TraceRecord> trace;
  trace.reserve(config.iterations);
  for (std::size_t i = 0; i < config.iterations; ++i) {
    const double t = temperature(schedule, i);
    MoveOutcome outcome = rjmcmc_step(current, ctx, rng);
    const bool outer = annealed_accept(outcome.proposed.log_post, current.log_post, t, rng);
    const bool changed = outer && outcome.inner_accepted && !(outcome.proposed == current);
    if (outer) current = std::move(outcome.proposed);
    if (current.log_post > best.log_post) {
      best = current;
      best_iteration = i + 1;
    }
    if (changed && track_test) current_test = mse_of_state(train, *test, current.centres, config);

    TraceRecord rec;
    rec.iteration = i + 1;
    rec.temperature = t;
    rec.k = current.k();
    rec.log_post = current.log_post;
    rec.best_log_post = best.log_post;
    rec.move = outcome.kind;
    rec.inner_accepted = outcome.inner_accepted;
    rec.outer_accepted = outer;
    rec.train_mse = std::accumulate(current.residuals.begin(), current.residuals.end(), 0.0) * train_scale;
    rec.test_mse = current_test;
    trace.push_back(rec);
  }

  Matrix coefficients;
  try {
    coefficients = fit_least_squares(build_design_matrix(train, best.centres, config.basis, config.metric), train.y());
  } catch (const DegenerateDesignError& e) {
    throw NumericalError(std::string("MAP state: ") + e.what());
  }
  const double train_mse =
      mean_squared_error(predict(best.centres, coefficients, config.basis, train.x(), config.metric), train.y());
  std::optional<double> test_mse;
  if (test != nullptr) {
    test_mse = mean_squared_error(predict(best.centres, coefficients, config.basis, test->x(), config.metric),
                                  test->y());
  }
  return FitResult{std::move(best), best_iteration, std::move(coefficients), train_mse, test_mse,
                   std::move(trace),  seed,           region,                 ctx.zeta()};
}

MultiStartResult run_multistart(const Dataset& train, const Dataset* test, const AnnealingConfig& config,
                                std::uint64_t seed, std::size_t chains) {
  if (chains == 0) throw ConfigError("chains must be >= 1");
  config.validate();
  std::vector<std::optional<FitResult>> results(chains);
  std::vector<std::exception_ptr> errors(chains);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chains);
    for (std::size_t s = 0; s < chains; ++s) {
      workers.emplace_back([&, s] {
        try {
          results[s] = run_annealing(train, test, config, seed + s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  MultiStartResult out;
  out.chains.reserve(chains);
  for (auto& r : results) out.chains.push_back(std::move(*r));
  for (std::size_t s = 1; s < chains; ++s) {
    if (out.chains[s].map_state.log_post > out.chains[out.best].map_state.log_post) out.best = s;
  }
  return out;
}

}  // namespace rjsa
