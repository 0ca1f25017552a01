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

// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after supported(Isa::kAvx2) returned true.

#include <immintrin.h>

#include <cmath>

#include "rjsa/kernels.hpp"

namespace rjsa::kernels {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  if (i + 4 <= n) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    i += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void accumulate_sq_diff(const double* x, double centre, double* acc, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(centre);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(diff, diff, _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) {
    const double diff = x[i] - centre;
    acc[i] += diff * diff;
  }
}

void radial_profile(RadialFamily family, double width, const double* sq, double* out,
                    std::size_t n) {
  std::size_t i = 0;
  switch (family) {
    case RadialFamily::kLinear:
      for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_sqrt_pd(_mm256_loadu_pd(sq + i)));
      for (; i < n; ++i) out[i] = std::sqrt(sq[i]);
      return;
    case RadialFamily::kCubic:
      for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(sq + i);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(v, _mm256_sqrt_pd(v)));
      }
      for (; i < n; ++i) out[i] = sq[i] * std::sqrt(sq[i]);
      return;
    case RadialFamily::kThinPlate:
      // No vector log in AVX2; the scalar libm path keeps the two tables identical here.
      for (; i < n; ++i) out[i] = sq[i] > 0.0 ? 0.5 * sq[i] * std::log(sq[i]) : 0.0;
      return;
    case RadialFamily::kGaussian: {
      const double scale = -0.5 / (width * width);
      for (; i < n; ++i) out[i] = std::exp(scale * sq[i]);
      return;
    }
  }
}

double sq_diff_sum(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(diff, diff, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2, dot, axpy, accumulate_sq_diff, radial_profile,
                                 sq_diff_sum};
  return table;
}

}  // namespace rjsa::kernels
