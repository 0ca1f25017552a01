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

#ifndef RJSA_POSTERIOR_HPP_
#define RJSA_POSTERIOR_HPP_

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rjsa/basis.hpp"
#include "rjsa/criteria.hpp"
#include "rjsa/dataset.hpp"
#include "rjsa/design.hpp"
#include "rjsa/region.hpp"

namespace rjsa {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// A residual y_i' P y_i at or below this fraction of y_i' y_i counts as an
/// exact fit.
inline constexpr double kExactFitTolerance = 1e-24;

enum class PosteriorStatus {
  kOk,
  kOutsideRegion,     // some centre outside the prior support
  kDegenerateDesign,  // rank-deficient design
  kZeroResidual,      // exact fit of some output (measure-zero event)
};

struct PosteriorEvaluation {
  double log_post = kNegInf;
  std::vector<double> residuals;  // y_i' P y_i per output; empty unless design was solvable
  PosteriorStatus status = PosteriorStatus::kOk;

  bool ok() const { return status == PosteriorStatus::kOk; }
};

/// -(N/2) sum_i ln(residual_i) - C k. Returns -inf if any residual is <= 0.
double log_posterior_from_residuals(std::span<const double> residuals, std::size_t samples,
                                    double calibration, std::size_t k);

/// Calibrated log marginal posterior of (k, mu) with amplitudes and noise
/// variances integrated out, up to an additive constant.
///
/// Holds a reference to the dataset; the dataset must outlive the model.
class PosteriorModel {
 public:
  PosteriorModel(const Dataset& data, BasisKind basis, Criterion criterion,
                 std::optional<BirthRegion> support = std::nullopt, DistanceMetric metric = {});

  PosteriorEvaluation evaluate(const CentreSet& centres) const;

  const Dataset& data() const { return *data_; }
  const BasisKind& basis() const { return basis_; }
  const Criterion& criterion() const { return criterion_; }
  const DistanceMetric& metric() const { return metric_; }
  const std::optional<BirthRegion>& support() const { return support_; }
  double calibration() const { return calibration_; }

 private:
  const Dataset* data_;
  BasisKind basis_;
  Criterion criterion_;
  std::optional<BirthRegion> support_;
  DistanceMetric metric_;
  double calibration_;
  std::vector<double> exact_fit_level_;
};

/// Free-function form of PosteriorModel::evaluate(...).log_post. Without a
/// support region the indicator term is taken to be 1.
double log_marginal_posterior(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                              const Criterion& crit, const BirthRegion* support = nullptr,
                              const DistanceMetric& metric = {});

}  // namespace rjsa

#endif  // RJSA_POSTERIOR_HPP_
