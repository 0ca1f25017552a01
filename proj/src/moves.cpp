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

#include "rjsa/moves.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace rjsa {
namespace {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// (N/2) sum_i ln(from_i / to_i)
double log_residual_ratio(std::span<const double> from, std::span<const double> to, std::size_t samples) {
  if (from.size() != to.size()) throw std::invalid_argument("residual vectors differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) s += std::log(from[i]) - std::log(to[i]);
  return static_cast<double>(samples) / 2.0 * s;
}

double log_displacement_volume(double zeta, std::size_t dim, RatioMode mode) {
  const double scale = mode == RatioMode::kDerived ? 2.0 * zeta : zeta;
  return static_cast<double>(dim) * std::log(scale);
}

std::size_t pick_index(std::size_t k, Rng& rng) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); }

bool metropolis_accept(double log_ratio, Rng& rng) {
  if (std::isnan(log_ratio) || log_ratio == kNegInf) return false;
  if (log_ratio >= 0.0) return true;
  return uniform01(rng) < std::exp(log_ratio);
}

MoveOutcome rejected(MoveKind kind, const SamplerState& state) {
  return MoveOutcome{kind, state, kNegInf, false};
}

// Evaluates the proposal, computes its ratio with `ratio_of` and applies the
// inner Metropolis-Hastings test.
template <typename RatioFn>
MoveOutcome finish(MoveKind kind, const SamplerState& state, CentreSet centres, const MoveContext& ctx, Rng& rng,
                   RatioFn ratio_of) {
  SamplerState candidate = make_state(ctx.model(), std::move(centres));
  if (candidate.log_post == kNegInf) return rejected(kind, state);
  const double log_ratio = ratio_of(candidate.residuals);
  if (!metropolis_accept(log_ratio, rng)) return MoveOutcome{kind, state, log_ratio, false};
  return MoveOutcome{kind, std::move(candidate), log_ratio, true};
}

}  // namespace

std::string_view move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kBirth:
      return "birth";
    case MoveKind::kDeath:
      return "death";
    case MoveKind::kSplit:
      return "split";
    case MoveKind::kMerge:
      return "merge";
    case MoveKind::kUpdate:
      return "update";
  }
  return "unknown";
}

SamplerState make_state(const PosteriorModel& model, CentreSet centres) {
  auto eval = model.evaluate(centres);
  return SamplerState{std::move(centres), std::move(eval.residuals), eval.log_post};
}

std::string_view ratio_mode_name(RatioMode mode) {
  return mode == RatioMode::kDerived ? "derived" : "as-printed";
}

RatioMode parse_ratio_mode(std::string_view name) {
  if (name == "derived") return RatioMode::kDerived;
  if (name == "as-printed") return RatioMode::kAsPrinted;
  throw std::invalid_argument("unknown ratio-mode '" + std::string(name) + "' (expected derived|as-printed)");
}

void MoveProbabilities::validate() const {
  for (double p : {birth, death, split, merge, update}) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw std::invalid_argument("move-probs: entries must be >= 0");
  }
  if (std::abs(sum() - 1.0) > 1e-9) throw std::invalid_argument("move-probs: entries must sum to 1");
}

MoveProbabilities MoveProbabilities::at_order(std::size_t k, std::size_t kmax) const {
  MoveProbabilities p = *this;
  if (k == 0) p.death = p.split = p.merge = 0.0;
  if (k <= 1) p.merge = 0.0;
  if (k >= kmax) p.birth = p.split = 0.0;
  const double total = p.sum();
  if (!(total > 0.0)) return MoveProbabilities{0.0, 0.0, 0.0, 0.0, 1.0};
  p.birth /= total;
  p.death /= total;
  p.split /= total;
  p.merge /= total;
  p.update /= total;
  return p;
}

MoveKind select_move(const MoveProbabilities& p, double u) {
  // Strict comparisons so a zero-probability move is never chosen at u = 0.
  double edge = p.birth;
  if (u < edge) return MoveKind::kBirth;
  edge += p.death;
  if (u < edge) return MoveKind::kDeath;
  edge += p.split;
  if (u < edge) return MoveKind::kSplit;
  edge += p.merge;
  if (u < edge) return MoveKind::kMerge;
  return MoveKind::kUpdate;
}

void MoveConfig::validate() const {
  probs.validate();
  if (zeta && (!(*zeta > 0.0) || !std::isfinite(*zeta))) throw std::invalid_argument("zeta must be positive");
  if (!(rw_step_frac > 0.0) || !std::isfinite(rw_step_frac)) {
    throw std::invalid_argument("rw-step-frac must be positive");
  }
  if (!(global_prop_prob >= 0.0 && global_prop_prob <= 1.0)) {
    throw std::invalid_argument("global-prop-prob must lie in [0, 1]");
  }
}

MoveContext::MoveContext(const PosteriorModel& model, const MoveConfig& config)
    : model_(&model), config_(config), zeta_(0.0) {
  if (!model.support()) throw std::invalid_argument("MoveContext: the posterior model needs a support region");
  config_.validate();
  zeta_ = config_.zeta.value_or(0.05 * model.support()->max_width());
}

double log_birth_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double log_volume, std::size_t k) {
  return log_residual_ratio(res_from, res_to, samples) + log_volume - calibration -
         std::log(static_cast<double>(k + 1));
}

double log_death_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double log_volume, std::size_t k) {
  return log_residual_ratio(res_from, res_to, samples) + std::log(static_cast<double>(k)) + calibration -
         log_volume;
}

double log_split_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double zeta, std::size_t dim, RatioMode mode, std::size_t k) {
  return log_residual_ratio(res_from, res_to, samples) + std::log(static_cast<double>(k)) +
         log_displacement_volume(zeta, dim, mode) - calibration - std::log(static_cast<double>(k + 1));
}

double log_merge_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double zeta, std::size_t dim, RatioMode mode, std::size_t k) {
  return log_residual_ratio(res_from, res_to, samples) + std::log(static_cast<double>(k)) + calibration -
         log_displacement_volume(zeta, dim, mode) - std::log(static_cast<double>(k - 1));
}

std::size_t nearest_centre(const CentreSet& centres, std::size_t j) {
  if (centres.size() < 2) throw std::invalid_argument("nearest_centre: need at least two centres");
  std::size_t best = j == 0 ? 1 : 0;
  double best_dist = euclidean(centres[j], centres[best]);
  for (std::size_t l = best + 1; l < centres.size(); ++l) {
    if (l == j) continue;
    const double dist = euclidean(centres[j], centres[l]);
    if (dist < best_dist) {
      best_dist = dist;
      best = l;
    }
  }
  return best;
}

MoveOutcome propose_birth(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const std::size_t k = state.k();
  if (k >= ctx.kmax()) return rejected(MoveKind::kBirth, state);
  CentreSet centres = state.centres;
  centres.push_back(ctx.region().sample(rng));
  const auto& model = ctx.model();
  return finish(MoveKind::kBirth, state, std::move(centres), ctx, rng, [&](const std::vector<double>& res) {
    return log_birth_ratio(state.residuals, res, model.data().size(), model.calibration(),
                           ctx.region().log_hypervolume(), k);
  });
}

MoveOutcome propose_death(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const std::size_t k = state.k();
  if (k == 0) return rejected(MoveKind::kDeath, state);
  CentreSet centres = state.centres;
  centres.erase(pick_index(k, rng));
  const auto& model = ctx.model();
  return finish(MoveKind::kDeath, state, std::move(centres), ctx, rng, [&](const std::vector<double>& res) {
    return log_death_ratio(state.residuals, res, model.data().size(), model.calibration(),
                           ctx.region().log_hypervolume(), k);
  });
}

MoveOutcome propose_split(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const std::size_t k = state.k();
  if (k == 0 || k >= ctx.kmax()) return rejected(MoveKind::kSplit, state);
  const std::size_t d = state.centres.dim();
  const double zeta = ctx.zeta();
  const std::size_t j = pick_index(k, rng);
  const auto mu = state.centres[j];
  std::vector<double> first(d);
  std::vector<double> second(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double offset = uniform01(rng) * zeta;
    first[i] = mu[i] - offset;
    second[i] = mu[i] + offset;
  }
  // The pair must be mergeable again: closer than 2 zeta, and each other's
  // nearest neighbour among all centres.
  const double separation = euclidean(first, second);
  if (!(separation < 2.0 * zeta)) return rejected(MoveKind::kSplit, state);
  for (std::size_t l = 0; l < k; ++l) {
    if (l == j) continue;
    if (euclidean(state.centres[l], first) <= separation || euclidean(state.centres[l], second) <= separation) {
      return rejected(MoveKind::kSplit, state);
    }
  }
  CentreSet centres = state.centres;
  centres.replace(j, first);
  centres.push_back(second);
  const auto& model = ctx.model();
  return finish(MoveKind::kSplit, state, std::move(centres), ctx, rng, [&](const std::vector<double>& res) {
    return log_split_ratio(state.residuals, res, model.data().size(), model.calibration(), zeta, d,
                           ctx.config().ratio_mode, k);
  });
}

MoveOutcome propose_merge(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const std::size_t k = state.k();
  if (k < 2) return rejected(MoveKind::kMerge, state);
  const std::size_t d = state.centres.dim();
  const double zeta = ctx.zeta();
  const std::size_t j = pick_index(k, rng);
  const std::size_t l = nearest_centre(state.centres, j);
  if (!(euclidean(state.centres[j], state.centres[l]) < 2.0 * zeta)) return rejected(MoveKind::kMerge, state);
  std::vector<double> midpoint(d);
  for (std::size_t i = 0; i < d; ++i) midpoint[i] = (state.centres[j][i] + state.centres[l][i]) / 2.0;
  CentreSet centres = state.centres;
  centres.replace(std::min(j, l), midpoint);
  centres.erase(std::max(j, l));
  const auto& model = ctx.model();
  return finish(MoveKind::kMerge, state, std::move(centres), ctx, rng, [&](const std::vector<double>& res) {
    return log_merge_ratio(state.residuals, res, model.data().size(), model.calibration(), zeta, d,
                           ctx.config().ratio_mode, k);
  });
}

MoveOutcome propose_update(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const std::size_t k = state.k();
  if (k == 0) return MoveOutcome{MoveKind::kUpdate, state, 0.0, true};
  const auto& region = ctx.region();
  const std::size_t j = pick_index(k, rng);
  std::vector<double> candidate;
  if (uniform01(rng) < ctx.config().global_prop_prob) {
    candidate = region.sample(rng);
  } else {
    const auto mu = state.centres[j];
    candidate.assign(mu.begin(), mu.end());
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      std::normal_distribution<double> step(0.0, ctx.config().rw_step_frac * region.width(i));
      candidate[i] += step(rng);
    }
  }
  if (!region.contains(candidate)) return rejected(MoveKind::kUpdate, state);
  CentreSet centres = state.centres;
  centres.replace(j, candidate);
  const std::size_t samples = ctx.model().data().size();
  // Both proposal branches are symmetric, so the ratio is the posterior ratio.
  return finish(MoveKind::kUpdate, state, std::move(centres), ctx, rng, [&](const std::vector<double>& res) {
    return log_residual_ratio(state.residuals, res, samples);
  });
}

MoveOutcome rjmcmc_step(const SamplerState& state, const MoveContext& ctx, Rng& rng) {
  const auto probs = ctx.config().probs.at_order(state.k(), ctx.kmax());
  switch (select_move(probs, uniform01(rng))) {
    case MoveKind::kBirth:
      return propose_birth(state, ctx, rng);
    case MoveKind::kDeath:
      return propose_death(state, ctx, rng);
    case MoveKind::kSplit:
      return propose_split(state, ctx, rng);
    case MoveKind::kMerge:
      return propose_merge(state, ctx, rng);
    case MoveKind::kUpdate:
      break;
  }
  return propose_update(state, ctx, rng);
}

}  // namespace rjsa
