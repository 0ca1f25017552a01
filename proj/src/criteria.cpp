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

#include "rjsa/criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "rjsa/least_squares.hpp"
#include "rjsa/posterior.hpp"

namespace rjsa {

Criterion Criterion::for_dataset(CriterionKind kind, const Dataset& data) {
  return Criterion{kind, data.size(), data.output_dim(), data.input_dim()};
}

CriterionKind parse_criterion(std::string_view name) {
  if (name == "aic") return CriterionKind::kAic;
  if (name == "bic") return CriterionKind::kBic;
  if (name == "mdl") return CriterionKind::kMdl;
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "' (expected aic|bic|mdl)");
}

std::string criterion_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::kAic:
      return "aic";
    case CriterionKind::kBic:
      return "bic";
    case CriterionKind::kMdl:
      return "mdl";
  }
  return "unknown";
}

std::size_t parameter_count(const Criterion& crit, std::size_t k) {
  return k * (crit.outputs + 1) + crit.outputs * (1 + crit.inputs);
}

// BIC and MDL share one expression so their values are bit-identical.
double penalty(const Criterion& crit, std::size_t k) {
  const double xi = static_cast<double>(parameter_count(crit, k));
  if (crit.kind == CriterionKind::kAic) return xi;
  return xi / 2.0 * std::log(static_cast<double>(crit.samples));
}

double calibration_constant(const Criterion& crit) {
  const double per_basis = static_cast<double>(crit.outputs + 1);
  if (crit.kind == CriterionKind::kAic) return per_basis;
  return per_basis * std::log(static_cast<double>(crit.samples)) / 2.0;
}

double penalized_score(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                       const Criterion& crit, const DistanceMetric& metric) {
  const Matrix design = build_design_matrix(data, centres, basis, metric);
  const auto sol = solve_least_squares(design, data.y(), false);
  if (sol.status == SolveStatus::kNonFinite) throw std::invalid_argument("penalized_score: non-finite input");
  if (sol.status == SolveStatus::kRankDeficient) throw DegenerateDesignError("penalized_score: rank-deficient design");
  double log_lik = 0.0;
  for (std::size_t i = 0; i < sol.residual_sq.size(); ++i) {
    const double r = sol.residual_sq[i];
    double sq = 0.0;
    for (double v : data.y().col(i)) sq += v * v;
    if (!(r > kExactFitTolerance * sq)) throw std::domain_error("penalized_score: exact fit, residual quadratic is zero");
    log_lik += std::log(r);
  }
  const double half_n = static_cast<double>(data.size()) / 2.0;
  return -half_n * log_lik - penalty(crit, centres.size());
}

}  // namespace rjsa
