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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rjsa/design.hpp"
#include "rjsa/kernels.hpp"
#include "rjsa/least_squares.hpp"

namespace rjsa {
namespace {

using kernels::Isa;

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void expect_close(double got, double want, double rel) {
  EXPECT_NEAR(got, want, rel * std::max(1.0, std::abs(want)));
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {
 protected:
  void SetUp() override {
    if (!kernels::supported(GetParam())) GTEST_SKIP() << "ISA not supported on this CPU";
  }
  const kernels::KernelTable& ref() const { return kernels::scalar_table(); }
  const kernels::KernelTable& simd() const { return kernels::table(GetParam()); }
};

// Lengths straddle the 4- and 8-lane boundaries so every tail path runs.
constexpr std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 67, 200, 1023};

TEST_P(KernelEquivalence, Dot) {
  std::mt19937_64 rng(11);
  for (std::size_t n : kLengths) {
    const auto a = random_vector(n, rng);
    const auto b = random_vector(n, rng);
    expect_close(simd().dot(a.data(), b.data(), n), ref().dot(a.data(), b.data(), n), 1e-13);
  }
}

TEST_P(KernelEquivalence, Axpy) {
  std::mt19937_64 rng(12);
  for (std::size_t n : kLengths) {
    const auto x = random_vector(n, rng);
    auto y1 = random_vector(n, rng);
    auto y2 = y1;
    ref().axpy(-0.37, x.data(), y1.data(), n);
    simd().axpy(-0.37, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) expect_close(y2[i], y1[i], 1e-15);
  }
}

TEST_P(KernelEquivalence, AccumulateSquaredDifference) {
  std::mt19937_64 rng(13);
  for (std::size_t n : kLengths) {
    const auto x = random_vector(n, rng);
    auto acc1 = random_vector(n, rng, 0.0, 1.0);
    auto acc2 = acc1;
    ref().accumulate_sq_diff(x.data(), 0.25, acc1.data(), n);
    simd().accumulate_sq_diff(x.data(), 0.25, acc2.data(), n);
    for (std::size_t i = 0; i < n; ++i) expect_close(acc2[i], acc1[i], 1e-15);
  }
}

TEST_P(KernelEquivalence, RadialProfileAllFamilies) {
  std::mt19937_64 rng(14);
  for (auto family : {RadialFamily::kLinear, RadialFamily::kCubic, RadialFamily::kThinPlate, RadialFamily::kGaussian}) {
    for (std::size_t n : kLengths) {
      auto sq = random_vector(n, rng, 0.0, 9.0);
      if (n > 2) sq[1] = 0.0;  // phi(0) path
      std::vector<double> o1(n), o2(n);
      ref().radial_profile(family, 0.7, sq.data(), o1.data(), n);
      simd().radial_profile(family, 0.7, sq.data(), o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) expect_close(o2[i], o1[i], 1e-15);
    }
  }
}

TEST_P(KernelEquivalence, SquaredDifferenceSum) {
  std::mt19937_64 rng(15);
  for (std::size_t n : kLengths) {
    const auto a = random_vector(n, rng);
    const auto b = random_vector(n, rng);
    expect_close(simd().sq_diff_sum(a.data(), b.data(), n), ref().sq_diff_sum(a.data(), b.data(), n), 1e-13);
  }
}

TEST_P(KernelEquivalence, EndToEndResidualAgreesAcrossIsas) {
  std::mt19937_64 rng(16);
  const Matrix x = oracle::random_matrix(57, 2, rng);
  const Matrix y = oracle::random_matrix(57, 2, rng);
  const CentreSet centres = CentreSet::from_matrix(oracle::random_matrix(6, 2, rng));

  kernels::select(Isa::kScalar);
  const auto ref_design = build_design_matrix(x, centres, BasisKind::cubic());
  const auto ref_sol = solve_least_squares(ref_design, y);
  kernels::select(GetParam());
  const auto design = build_design_matrix(x, centres, BasisKind::cubic());
  const auto sol = solve_least_squares(design, y);
  kernels::select(Isa::kScalar);

  ASSERT_EQ(sol.status, SolveStatus::kOk);
  for (std::size_t i = 0; i < design.data().size(); ++i) expect_close(design.data()[i], ref_design.data()[i], 1e-14);
  for (std::size_t i = 0; i < 2; ++i) expect_close(sol.residual_sq[i], ref_sol.residual_sq[i], 1e-10);
  for (std::size_t i = 0; i < sol.coefficients.data().size(); ++i) {
    expect_close(sol.coefficients.data()[i], ref_sol.coefficients.data()[i], 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::Values(Isa::kScalar, Isa::kAvx2),
                         [](const auto& info) { return std::string(kernels::isa_name(info.param)); });

TEST(KernelDispatch, ScalarAlwaysSupported) {
  EXPECT_TRUE(kernels::supported(Isa::kScalar));
  EXPECT_EQ(kernels::supported_isas().front(), Isa::kScalar);
}

TEST(KernelDispatch, ParseAndName) {
  EXPECT_EQ(kernels::parse_isa("scalar"), Isa::kScalar);
  EXPECT_EQ(kernels::parse_isa("avx2"), Isa::kAvx2);
  EXPECT_EQ(kernels::isa_name(Isa::kAvx2), "avx2");
  EXPECT_THROW(kernels::parse_isa("neon9"), std::invalid_argument);
}

TEST(KernelDispatch, SelectSwitchesActiveTable) {
  const Isa before = kernels::active().isa;
  kernels::select(Isa::kScalar);
  EXPECT_EQ(kernels::active().isa, Isa::kScalar);
  kernels::select(before);
  EXPECT_EQ(kernels::active().isa, before);
}

TEST(KernelDispatch, WidestSupportedIsListedLast) {
  const Isa widest = kernels::supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  EXPECT_EQ(kernels::supported_isas().back(), widest);
}

}  // namespace
}  // namespace rjsa
