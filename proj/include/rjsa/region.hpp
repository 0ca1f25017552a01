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

#ifndef RJSA_REGION_HPP_
#define RJSA_REGION_HPP_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "rjsa/matrix.hpp"

namespace rjsa {

using Rng = std::mt19937_64;

/// Draws from U[0, 1).
inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Axis-aligned box that is both the support of the centre prior and the
/// birth proposal region. Its hypervolume is the normaliser of the uniform
/// birth density.
class BirthRegion {
 public:
  /// Throws std::invalid_argument unless upper[j] > lower[j] for every j.
  BirthRegion(std::vector<double> lower, std::vector<double> upper);

  /// Bounding box of the rows of `x`, each side widened by `margin` times
  /// its width. A degenerate (zero-width) side is widened to +-0.5 first.
  static BirthRegion around(const Matrix& x, double margin);

  std::size_t dim() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }
  double max_width() const;
  double hypervolume() const;
  double log_hypervolume() const;

  bool contains(std::span<const double> point) const;
  std::vector<double> sample(Rng& rng) const;

  friend bool operator==(const BirthRegion&, const BirthRegion&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace rjsa

#endif  // RJSA_REGION_HPP_
