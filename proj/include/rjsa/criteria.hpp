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

#ifndef RJSA_CRITERIA_HPP_
#define RJSA_CRITERIA_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "rjsa/basis.hpp"
#include "rjsa/dataset.hpp"
#include "rjsa/design.hpp"

namespace rjsa {

enum class CriterionKind { kAic, kBic, kMdl };

/// Classical model-selection criterion for an RBF network with N samples,
/// d inputs and c outputs.
///
/// The per-basis increment of the penalty is the constant C of the prior
/// p(k) ~ exp(-C k), so the penalised likelihood and the calibrated
/// posterior differ only by a state-independent constant.
struct Criterion {
  CriterionKind kind = CriterionKind::kMdl;
  std::size_t samples = 1;  // N
  std::size_t outputs = 1;  // c
  std::size_t inputs = 1;   // d

  static Criterion for_dataset(CriterionKind kind, const Dataset& data);
};

/// aic | bic | mdl
CriterionKind parse_criterion(std::string_view name);
std::string criterion_name(CriterionKind kind);

/// xi = k (c + 1) + c (1 + d)
std::size_t parameter_count(const Criterion& crit, std::size_t k);

/// AIC: xi.  BIC and MDL: (xi / 2) ln N.
double penalty(const Criterion& crit, std::size_t k);

/// AIC: c + 1.  BIC and MDL: (c + 1) ln(N) / 2.
double calibration_constant(const Criterion& crit);

/// log of the penalised likelihood, -(N/2) sum_i ln(y_i' P y_i) - penalty(k).
/// Throws DegenerateDesignError / std::invalid_argument like
/// residual_quadratic, and std::domain_error on an exact fit.
double penalized_score(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                       const Criterion& crit, const DistanceMetric& metric = {});

}  // namespace rjsa

#endif  // RJSA_CRITERIA_HPP_
