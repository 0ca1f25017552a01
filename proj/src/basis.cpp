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

#include "rjsa/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rjsa {

BasisKind BasisKind::gaussian(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("gaussian basis width must be positive and finite");
  }
  return BasisKind(RadialFamily::kGaussian, width);
}

BasisKind BasisKind::parse(std::string_view name, double gaussian_width) {
  if (name == "linear") return linear();
  if (name == "cubic") return cubic();
  if (name == "thin-plate") return thin_plate();
  if (name == "gaussian") return gaussian(gaussian_width);
  throw std::invalid_argument("unknown basis '" + std::string(name) +
                              "' (expected linear|cubic|thin-plate|gaussian)");
}

std::string BasisKind::name() const {
  switch (family_) {
    case RadialFamily::kLinear:
      return "linear";
    case RadialFamily::kCubic:
      return "cubic";
    case RadialFamily::kThinPlate:
      return "thin-plate";
    case RadialFamily::kGaussian:
      return "gaussian";
  }
  return "unknown";
}

double BasisKind::operator()(double r) const {
  switch (family_) {
    case RadialFamily::kLinear:
      return r;
    case RadialFamily::kCubic:
      return r * r * r;
    case RadialFamily::kThinPlate:
      return r > 0.0 ? r * r * std::log(r) : 0.0;
    case RadialFamily::kGaussian:
      return std::exp(-r * r / (2.0 * width_ * width_));
  }
  return 0.0;
}

DistanceMetric DistanceMetric::mahalanobis(const Matrix& weight) {
  const std::size_t d = weight.rows();
  if (d == 0 || weight.cols() != d) throw std::invalid_argument("Mahalanobis weight must be square");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double scale = std::max(std::abs(weight(i, j)), std::abs(weight(j, i)));
      if (std::abs(weight(i, j) - weight(j, i)) > 1e-12 * std::max(scale, 1.0)) {
        throw std::invalid_argument("Mahalanobis weight must be symmetric");
      }
    }
  }
  // Cholesky W = L L'; we keep U = L'.
  Matrix lower(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    double diag = weight(j, j);
    for (std::size_t p = 0; p < j; ++p) diag -= lower(j, p) * lower(j, p);
    if (!(diag > 0.0)) throw std::invalid_argument("Mahalanobis weight must be positive definite");
    lower(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < d; ++i) {
      double v = weight(i, j);
      for (std::size_t p = 0; p < j; ++p) v -= lower(i, p) * lower(j, p);
      lower(i, j) = v / lower(j, j);
    }
  }
  DistanceMetric m;
  m.weight_ = weight;
  m.factor_ = lower.transpose();
  return m;
}

Matrix DistanceMetric::to_euclidean(const Matrix& points) const {
  if (!factor_) return points;
  const Matrix& u = *factor_;
  if (points.cols() != u.rows()) throw std::invalid_argument("metric dimension mismatch");
  Matrix out(points.rows(), points.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = i; j < u.cols(); ++j) {
      const double w = u(i, j);
      for (std::size_t t = 0; t < points.rows(); ++t) out(t, i) += w * points(t, j);
    }
  }
  return out;
}

std::vector<double> DistanceMetric::to_euclidean(std::span<const double> point) const {
  if (!factor_) return {point.begin(), point.end()};
  const Matrix& u = *factor_;
  if (point.size() != u.rows()) throw std::invalid_argument("metric dimension mismatch");
  std::vector<double> out(point.size(), 0.0);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = i; j < u.cols(); ++j) out[i] += u(i, j) * point[j];
  return out;
}

double DistanceMetric::distance(std::span<const double> a, std::span<const double> b) const {
  if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  const auto z = to_euclidean(diff);
  double s = 0.0;
  for (double v : z) s += v * v;
  return std::sqrt(s);
}

}  // namespace rjsa
