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

#include "rjsa/posterior.hpp"

#include <cmath>

#include "rjsa/least_squares.hpp"

namespace rjsa {

double log_posterior_from_residuals(std::span<const double> residuals, std::size_t samples,
                                    double calibration, std::size_t k) {
  double log_sum = 0.0;
  for (double r : residuals) {
    if (!(r > 0.0)) return kNegInf;
    log_sum += std::log(r);
  }
  return -static_cast<double>(samples) / 2.0 * log_sum - calibration * static_cast<double>(k);
}

PosteriorModel::PosteriorModel(const Dataset& data, BasisKind basis, Criterion criterion,
                               std::optional<BirthRegion> support, DistanceMetric metric)
    : data_(&data),
      basis_(basis),
      criterion_(criterion),
      support_(std::move(support)),
      metric_(std::move(metric)),
      calibration_(calibration_constant(criterion)) {
  for (std::size_t i = 0; i < data.output_dim(); ++i) {
    double sq = 0.0;
    for (double v : data.y().col(i)) sq += v * v;
    exact_fit_level_.push_back(kExactFitTolerance * sq);
  }
  if (support_ && support_->dim() != data.input_dim()) {
    throw std::invalid_argument("PosteriorModel: support dimension differs from input dimension");
  }
}

PosteriorEvaluation PosteriorModel::evaluate(const CentreSet& centres) const {
  PosteriorEvaluation out;
  if (support_) {
    for (std::size_t j = 0; j < centres.size(); ++j) {
      if (!support_->contains(centres[j])) {
        out.status = PosteriorStatus::kOutsideRegion;
        return out;
      }
    }
  }
  const Matrix design = build_design_matrix(*data_, centres, basis_, metric_);
  auto sol = solve_least_squares(design, data_->y(), false);
  if (sol.status != SolveStatus::kOk) {
    out.status = PosteriorStatus::kDegenerateDesign;
    return out;
  }
  out.residuals = std::move(sol.residual_sq);
  // Residuals at roundoff level relative to |y_i|^2 are exact fits.
  for (std::size_t i = 0; i < out.residuals.size(); ++i) {
    if (out.residuals[i] <= exact_fit_level_[i]) {
      out.status = PosteriorStatus::kZeroResidual;
      return out;
    }
  }
  out.log_post = log_posterior_from_residuals(out.residuals, data_->size(), calibration_, centres.size());
  if (out.log_post == kNegInf) out.status = PosteriorStatus::kZeroResidual;
  return out;
}

double log_marginal_posterior(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                              const Criterion& crit, const BirthRegion* support, const DistanceMetric& metric) {
  std::optional<BirthRegion> region;
  if (support != nullptr) region = *support;
  return PosteriorModel(data, basis, crit, std::move(region), metric).evaluate(centres).log_post;
}

}  // namespace rjsa
