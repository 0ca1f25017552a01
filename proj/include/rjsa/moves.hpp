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

#ifndef RJSA_MOVES_HPP_
#define RJSA_MOVES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rjsa/design.hpp"
#include "rjsa/posterior.hpp"
#include "rjsa/region.hpp"

namespace rjsa {

enum class MoveKind { kBirth, kDeath, kSplit, kMerge, kUpdate };

std::string_view move_name(MoveKind kind);

/// Chain state (k, mu) with its cached residual quadratics and log posterior.
struct SamplerState {
  CentreSet centres;
  std::vector<double> residuals;
  double log_post = kNegInf;

  std::size_t k() const { return centres.size(); }
  friend bool operator==(const SamplerState&, const SamplerState&) = default;
};

/// Evaluates `centres` under `model`. The result may carry log_post = -inf.
SamplerState make_state(const PosteriorModel& model, CentreSet centres);

/// Split/merge ratio convention. kDerived includes the (2 zeta)^d Jacobian;
/// kAsPrinted uses zeta^d in its place.
enum class RatioMode { kDerived, kAsPrinted };

std::string_view ratio_mode_name(RatioMode mode);
RatioMode parse_ratio_mode(std::string_view name);

/// Move probabilities in dispatch order: birth, death, split, merge, update.
struct MoveProbabilities {
  double birth = 0.2;
  double death = 0.2;
  double split = 0.2;
  double merge = 0.2;
  double update = 0.2;

  /// Throws std::invalid_argument unless all entries are >= 0 and sum to 1
  /// within 1e-9.
  void validate() const;
  double sum() const { return birth + death + split + merge + update; }

  /// Zeroes the moves that are impossible at order k (no death, split or
  /// merge at k = 0, no merge at k = 1, no birth or split at k = kmax) and
  /// rescales the rest to sum to one. Falls back to a pure update when
  /// nothing else is left.
  MoveProbabilities at_order(std::size_t k, std::size_t kmax) const;
};

/// Picks a move from u in [0, 1) against the cumulative thresholds
/// birth, +death, +split, +merge; anything above is an update.
MoveKind select_move(const MoveProbabilities& probs, double u);

struct MoveConfig {
  std::size_t kmax = 50;
  std::optional<double> zeta;  // default: 5% of the widest region side
  RatioMode ratio_mode = RatioMode::kDerived;
  MoveProbabilities probs;
  double rw_step_frac = 0.1;      // random-walk sd as a fraction of each region side
  double global_prop_prob = 0.1;  // chance that an update redraws uniformly over the region

  void validate() const;
};

/// Everything a move needs besides the state and the RNG. Holds references
/// to the model; both must outlive the context.
class MoveContext {
 public:
  MoveContext(const PosteriorModel& model, const MoveConfig& config);

  const PosteriorModel& model() const { return *model_; }
  const BirthRegion& region() const { return *model_->support(); }
  const MoveConfig& config() const { return config_; }
  double zeta() const { return zeta_; }
  std::size_t kmax() const { return config_.kmax; }

 private:
  const PosteriorModel* model_;
  MoveConfig config_;
  double zeta_;
};

struct MoveOutcome {
  MoveKind kind = MoveKind::kUpdate;
  SamplerState proposed;              // equals the input state unless inner_accepted
  double log_inner_ratio = kNegInf;   // -inf for auto-rejected proposals
  bool inner_accepted = false;
};

// Log acceptance ratios from residual quadratics. `res_from` belongs to the
// current state of order k, `res_to` to the proposal.
double log_birth_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double log_volume, std::size_t k);
double log_death_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double log_volume, std::size_t k);
double log_split_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double zeta, std::size_t dim, RatioMode mode, std::size_t k);
double log_merge_ratio(std::span<const double> res_from, std::span<const double> res_to, std::size_t samples,
                       double calibration, double zeta, std::size_t dim, RatioMode mode, std::size_t k);

MoveOutcome propose_birth(const SamplerState& state, const MoveContext& ctx, Rng& rng);
MoveOutcome propose_death(const SamplerState& state, const MoveContext& ctx, Rng& rng);
MoveOutcome propose_split(const SamplerState& state, const MoveContext& ctx, Rng& rng);
MoveOutcome propose_merge(const SamplerState& state, const MoveContext& ctx, Rng& rng);
MoveOutcome propose_update(const SamplerState& state, const MoveContext& ctx, Rng& rng);

/// One application of the reversible-jump kernel.
MoveOutcome rjmcmc_step(const SamplerState& state, const MoveContext& ctx, Rng& rng);

/// Index of the centre nearest to centre j (Euclidean, ties to the lowest
/// index). Requires at least two centres.
std::size_t nearest_centre(const CentreSet& centres, std::size_t j);

}  // namespace rjsa

#endif  // RJSA_MOVES_HPP_
