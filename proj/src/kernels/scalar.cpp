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

// Reference kernels. Everything else is checked against these.

#include <cmath>

#include "rjsa/kernels.hpp"

namespace rjsa::kernels {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void accumulate_sq_diff(const double* x, double centre, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = x[i] - centre;
    acc[i] += diff * diff;
  }
}

void radial_profile(RadialFamily family, double width, const double* sq, double* out,
                    std::size_t n) {
  switch (family) {
    case RadialFamily::kLinear:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(sq[i]);
      break;
    case RadialFamily::kCubic:
      for (std::size_t i = 0; i < n; ++i) out[i] = sq[i] * std::sqrt(sq[i]);
      break;
    case RadialFamily::kThinPlate:
      // r^2 ln r = 0.5 r^2 ln r^2, with the removable singularity at 0.
      for (std::size_t i = 0; i < n; ++i) out[i] = sq[i] > 0.0 ? 0.5 * sq[i] * std::log(sq[i]) : 0.0;
      break;
    case RadialFamily::kGaussian: {
      const double scale = -0.5 / (width * width);
      for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(scale * sq[i]);
      break;
    }
  }
}

double sq_diff_sum(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar, dot, axpy, accumulate_sq_diff, radial_profile,
                                 sq_diff_sum};
  return table;
}

}  // namespace rjsa::kernels
