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

#ifndef RJSA_DESIGN_HPP_
#define RJSA_DESIGN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rjsa/basis.hpp"
#include "rjsa/dataset.hpp"
#include "rjsa/matrix.hpp"

namespace rjsa {

/// k centres in d dimensions, stored row-major.
class CentreSet {
 public:
  explicit CentreSet(std::size_t dim) : dim_(dim) {}
  /// Builds from a k x d matrix (one centre per row).
  static CentreSet from_matrix(const Matrix& mu);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> operator[](std::size_t j) const { return {coords_.data() + j * dim_, dim_}; }

  void push_back(std::span<const double> centre);
  void erase(std::size_t j);
  void replace(std::size_t j, std::span<const double> centre);

  Matrix to_matrix() const;
  std::span<const double> flat() const { return coords_; }

  friend bool operator==(const CentreSet&, const CentreSet&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Column count of the design matrix: constant, d linear terms, k radial terms.
inline std::size_t design_cols(std::size_t d, std::size_t k) { return 1 + d + k; }

/// D = [1 | x | phi(||x_t - mu_j||)], N x (1 + d + k).
/// Throws std::invalid_argument when the centre dimension differs from x.
Matrix build_design_matrix(const Matrix& x, const CentreSet& centres, const BasisKind& basis,
                           const DistanceMetric& metric = {});
Matrix build_design_matrix(const Dataset& data, const CentreSet& centres, const BasisKind& basis,
                           const DistanceMetric& metric = {});

/// Network output D(mu, x_new) * coefficients, M x c.
Matrix predict(const CentreSet& centres, const Matrix& coefficients, const BasisKind& basis,
               const Matrix& x_new, const DistanceMetric& metric = {});

}  // namespace rjsa

#endif  // RJSA_DESIGN_HPP_
