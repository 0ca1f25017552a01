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

#ifndef RJSA_BASIS_HPP_
#define RJSA_BASIS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rjsa/kernels.hpp"
#include "rjsa/matrix.hpp"

namespace rjsa {

/// Radial basis phi(r). Gaussian is exp(-r^2 / (2 width^2)), thin-plate is
/// r^2 ln r with phi(0) = 0, cubic is r^3 and linear is r.
class BasisKind {
 public:
  static BasisKind linear() { return BasisKind(RadialFamily::kLinear, 1.0); }
  static BasisKind cubic() { return BasisKind(RadialFamily::kCubic, 1.0); }
  static BasisKind thin_plate() { return BasisKind(RadialFamily::kThinPlate, 1.0); }
  /// Throws std::invalid_argument unless width > 0.
  static BasisKind gaussian(double width);

  /// Accepts linear | cubic | thin-plate | gaussian (the latter with `width`).
  static BasisKind parse(std::string_view name, double gaussian_width = 1.0);

  RadialFamily family() const { return family_; }
  double width() const { return width_; }
  std::string name() const;

  /// phi at a single radius.
  double operator()(double r) const;

  friend bool operator==(const BasisKind&, const BasisKind&) = default;

 private:
  BasisKind(RadialFamily family, double width) : family_(family), width_(width) {}

  RadialFamily family_;
  double width_;
};

/// Distance used inside phi. Euclidean by default; Mahalanobis with a
/// symmetric positive-definite weight W gives sqrt((a-b)' W (a-b)).
class DistanceMetric {
 public:
  DistanceMetric() = default;
  static DistanceMetric euclidean() { return {}; }
  /// Throws std::invalid_argument if `weight` is not square, not symmetric
  /// or not positive definite.
  static DistanceMetric mahalanobis(const Matrix& weight);

  bool is_euclidean() const { return !factor_.has_value(); }
  const Matrix& weight() const { return weight_; }

  /// Maps points (rows of `points`) into coordinates where this metric is
  /// Euclidean: U p with W = U'U. Identity for the Euclidean metric.
  Matrix to_euclidean(const Matrix& points) const;
  std::vector<double> to_euclidean(std::span<const double> point) const;

  double distance(std::span<const double> a, std::span<const double> b) const;

 private:
  Matrix weight_;
  std::optional<Matrix> factor_;  // upper-triangular U
};

}  // namespace rjsa

#endif  // RJSA_BASIS_HPP_
