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

#include "rjsa/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rjsa {

BirthRegion::BirthRegion(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw std::invalid_argument("BirthRegion: bounds must be non-empty and of equal length");
  }
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || !(upper_[j] > lower_[j])) {
      throw std::invalid_argument("BirthRegion: need finite bounds with upper > lower in every dimension");
    }
  }
}

BirthRegion BirthRegion::around(const Matrix& x, double margin) {
  if (x.rows() == 0 || x.cols() == 0) throw std::invalid_argument("BirthRegion::around: empty input");
  if (!(margin >= 0.0) || !std::isfinite(margin)) throw std::invalid_argument("BirthRegion: margin must be >= 0");
  std::vector<double> lo(x.cols());
  std::vector<double> hi(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const auto [mn, mx] = std::minmax_element(x.col(j).begin(), x.col(j).end());
    lo[j] = *mn;
    hi[j] = *mx;
    if (hi[j] == lo[j]) {
      lo[j] -= 0.5;
      hi[j] += 0.5;
    }
    const double pad = margin * (hi[j] - lo[j]);
    lo[j] -= pad;
    hi[j] += pad;
  }
  return BirthRegion(std::move(lo), std::move(hi));
}

double BirthRegion::max_width() const {
  double w = 0.0;
  for (std::size_t j = 0; j < dim(); ++j) w = std::max(w, width(j));
  return w;
}

double BirthRegion::hypervolume() const {
  double v = 1.0;
  for (std::size_t j = 0; j < dim(); ++j) v *= width(j);
  return v;
}

double BirthRegion::log_hypervolume() const {
  double s = 0.0;
  for (std::size_t j = 0; j < dim(); ++j) s += std::log(width(j));
  return s;
}

bool BirthRegion::contains(std::span<const double> point) const {
  if (point.size() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!(point[j] >= lower_[j] && point[j] <= upper_[j])) return false;
  }
  return true;
}

std::vector<double> BirthRegion::sample(Rng& rng) const {
  std::vector<double> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = lower_[j] + width(j) * uniform01(rng);
  return out;
}

}  // namespace rjsa
