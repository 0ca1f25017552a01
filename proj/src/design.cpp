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

#include "rjsa/design.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rjsa/kernels.hpp"

namespace rjsa {

CentreSet CentreSet::from_matrix(const Matrix& mu) {
  CentreSet out(mu.cols());
  for (std::size_t j = 0; j < mu.rows(); ++j) out.push_back(mu.row(j));
  return out;
}

void CentreSet::push_back(std::span<const double> centre) {
  if (centre.size() != dim_) throw std::invalid_argument("CentreSet::push_back: dimension mismatch");
  coords_.insert(coords_.end(), centre.begin(), centre.end());
}

void CentreSet::erase(std::size_t j) {
  if (j >= size()) throw std::out_of_range("CentreSet::erase");
  auto first = coords_.begin() + static_cast<std::ptrdiff_t>(j * dim_);
  coords_.erase(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void CentreSet::replace(std::size_t j, std::span<const double> centre) {
  if (j >= size()) throw std::out_of_range("CentreSet::replace");
  if (centre.size() != dim_) throw std::invalid_argument("CentreSet::replace: dimension mismatch");
  std::copy(centre.begin(), centre.end(), coords_.begin() + static_cast<std::ptrdiff_t>(j * dim_));
}

Matrix CentreSet::to_matrix() const {
  Matrix out(size(), dim_);
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) out(j, i) = coords_[j * dim_ + i];
  return out;
}

Matrix build_design_matrix(const Matrix& x, const CentreSet& centres, const BasisKind& basis,
                           const DistanceMetric& metric) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  const std::size_t k = centres.size();
  if (centres.dim() != d) {
    throw std::invalid_argument("design matrix: centres have dimension " + std::to_string(centres.dim()) +
                                " but inputs have " + std::to_string(d));
  }
  Matrix design(n, design_cols(d, k));
  std::fill(design.col(0).begin(), design.col(0).end(), 1.0);
  for (std::size_t i = 0; i < d; ++i) std::copy(x.col(i).begin(), x.col(i).end(), design.col(1 + i).begin());
  if (k == 0) return design;

  const auto& kern = kernels::active();
  const Matrix z = metric.to_euclidean(x);
  for (std::size_t j = 0; j < k; ++j) {
    const auto centre = metric.to_euclidean(centres[j]);
    auto out = design.col(1 + d + j);
    // Squared distances accumulate in the output column, then map through phi in place.
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i) kern.accumulate_sq_diff(z.col(i).data(), centre[i], out.data(), n);
    kern.radial_profile(basis.family(), basis.width(), out.data(), out.data(), n);
  }
  return design;
}

Matrix build_design_matrix(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                           const DistanceMetric& metric) {
  return build_design_matrix(data.x(), centres, basis, metric);
}

Matrix predict(const CentreSet& centres, const Matrix& coefficients, const BasisKind& basis,
               const Matrix& x_new, const DistanceMetric& metric) {
  const std::size_t m = design_cols(x_new.cols(), centres.size());
  if (coefficients.rows() != m) {
    throw std::invalid_argument("predict: expected " + std::to_string(m) + " coefficient rows, got " +
                                std::to_string(coefficients.rows()));
  }
  return multiply(build_design_matrix(x_new, centres, basis, metric), coefficients);
}

}  // namespace rjsa
