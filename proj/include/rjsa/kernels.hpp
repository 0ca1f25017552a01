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

#ifndef RJSA_KERNELS_HPP_
#define RJSA_KERNELS_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace rjsa {

/// Radial profile families. The numeric value is stable and used by kernels.
enum class RadialFamily { kLinear, kCubic, kThinPlate, kGaussian };

namespace kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
/// Parses "scalar" or "avx2"; throws std::invalid_argument otherwise.
Isa parse_isa(std::string_view name);

/// Inner loops of the design-matrix build and of the Householder QR.
///
/// Every implementation must agree with the scalar table to within a few
/// ulps per accumulated term; the equivalence tests pin this.
struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // acc[i] += (x[i] - centre)^2
  void (*accumulate_sq_diff)(const double* x, double centre, double* acc, std::size_t n);
  // out[i] = phi(sqrt(sq_dist[i])); `width` is only read for the Gaussian.
  void (*radial_profile)(RadialFamily family, double width, const double* sq_dist, double* out,
                         std::size_t n);
  // sum_i (a[i] - b[i])^2
  double (*sq_diff_sum)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(RJSA_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

/// True when the ISA was compiled in and the running CPU supports it.
bool supported(Isa isa);
std::vector<Isa> supported_isas();

/// Table used by the library. Chosen on first use: the RJSA_KERNELS
/// environment variable if set, else the widest supported ISA.
const KernelTable& active();
/// Forces a table; throws std::runtime_error when `isa` is unsupported.
/// Not synchronized with running fits; call it before starting chains.
void select(Isa isa);
const KernelTable& table(Isa isa);

}  // namespace kernels
}  // namespace rjsa

#endif  // RJSA_KERNELS_HPP_
