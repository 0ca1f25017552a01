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
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rjsa/criteria.hpp"
#include "rjsa/design.hpp"
#include "rjsa/errors.hpp"
#include "rjsa/least_squares.hpp"
#include "rjsa/posterior.hpp"

namespace rjsa {
namespace {

CentreSet centres_of(std::initializer_list<std::initializer_list<double>> rows) {
  return CentreSet::from_matrix(Matrix::from_rows(rows));
}

// ------------------------------------------------------------ design matrix

TEST(DesignMatrix, NoCentresIsConstantPlusInputs) {
  const Matrix x = Matrix::from_rows({{0.5}, {-1.0}});
  const Matrix d = build_design_matrix(x, CentreSet(1), BasisKind::cubic());
  EXPECT_EQ(d, Matrix::from_rows({{1.0, 0.5}, {1.0, -1.0}}));
}

TEST(DesignMatrix, CubicEntryIsCubedDistance) {
  const Matrix x = Matrix::from_rows({{0.0, 0.0}});
  const Matrix d = build_design_matrix(x, centres_of({{3.0, 4.0}}), BasisKind::cubic());
  ASSERT_EQ(d.cols(), 4u);
  EXPECT_DOUBLE_EQ(d(0, 3), 125.0);
}

TEST(DesignMatrix, GaussianPeakIsOne) {
  const Matrix x = Matrix::from_rows({{0.3, -0.2}});
  const Matrix d = build_design_matrix(x, centres_of({{0.3, -0.2}}), BasisKind::gaussian(0.4));
  EXPECT_DOUBLE_EQ(d(0, 3), 1.0);
}

TEST(DesignMatrix, LayoutMatchesPerEntryDefinition) {
  std::mt19937_64 rng(3);
  const Matrix x = oracle::random_matrix(13, 3, rng);
  const Matrix mu = oracle::random_matrix(4, 3, rng);
  for (const auto& basis : {BasisKind::linear(), BasisKind::cubic(), BasisKind::thin_plate(), BasisKind::gaussian(0.8)}) {
    const Matrix d = build_design_matrix(x, CentreSet::from_matrix(mu), basis);
    ASSERT_EQ(d.cols(), design_cols(3, 4));
    for (std::size_t t = 0; t < 13; ++t) {
      EXPECT_EQ(d(t, 0), 1.0);
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d(t, 1 + i), x(t, i));
      for (std::size_t j = 0; j < 4; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < 3; ++i) sq += (x(t, i) - mu(j, i)) * (x(t, i) - mu(j, i));
        EXPECT_NEAR(d(t, 4 + j), basis(std::sqrt(sq)), 1e-12) << basis.name();
      }
    }
  }
}

TEST(DesignMatrix, DimensionMismatchThrows) {
  const Matrix x = Matrix::from_rows({{0.0, 0.0}});
  EXPECT_THROW(build_design_matrix(x, centres_of({{1.0}}), BasisKind::cubic()), std::invalid_argument);
}

TEST(DesignMatrix, MahalanobisMatchesExplicitQuadraticForm) {
  const Matrix w = Matrix::from_rows({{2.0, 0.5}, {0.5, 1.0}});
  const auto metric = DistanceMetric::mahalanobis(w);
  const Matrix x = Matrix::from_rows({{0.1, 0.7}, {-1.0, 2.0}});
  const Matrix d = build_design_matrix(x, centres_of({{0.4, -0.3}}), BasisKind::linear(), metric);
  for (std::size_t t = 0; t < 2; ++t) {
    const double a = x(t, 0) - 0.4;
    const double b = x(t, 1) + 0.3;
    EXPECT_NEAR(d(t, 3), std::sqrt(2.0 * a * a + 2 * 0.5 * a * b + 1.0 * b * b), 1e-14);
  }
}

TEST(DistanceMetric, RejectsNonPositiveDefinite) {
  EXPECT_THROW(DistanceMetric::mahalanobis(Matrix::from_rows({{1.0, 2.0}, {2.0, 1.0}})), std::invalid_argument);
  EXPECT_THROW(DistanceMetric::mahalanobis(Matrix::from_rows({{1.0, 0.1}, {0.0, 1.0}})), std::invalid_argument);
}

TEST(BasisKind, Conventions) {
  EXPECT_DOUBLE_EQ(BasisKind::linear()(2.0), 2.0);
  EXPECT_DOUBLE_EQ(BasisKind::cubic()(2.0), 8.0);
  EXPECT_DOUBLE_EQ(BasisKind::thin_plate()(0.0), 0.0);
  EXPECT_DOUBLE_EQ(BasisKind::thin_plate()(std::exp(1.0)), std::exp(2.0));
  EXPECT_DOUBLE_EQ(BasisKind::gaussian(2.0)(2.0), std::exp(-0.5));
  EXPECT_THROW(BasisKind::gaussian(0.0), std::invalid_argument);
  EXPECT_THROW(BasisKind::parse("quintic"), std::invalid_argument);
}

// ------------------------------------------------------------ least squares

TEST(LeastSquares, SquareInvertibleInterpolates) {
  const Matrix d = Matrix::from_rows({{1.0, 2.0, 0.0}, {1.0, -1.0, 3.0}, {1.0, 0.5, -2.0}});
  const Matrix y = Matrix::from_rows({{1.0, 0.0}, {2.0, 1.0}, {3.0, -1.0}});
  const auto sol = solve_least_squares(d, y);
  ASSERT_EQ(sol.status, SolveStatus::kOk);
  const Matrix fitted = multiply(d, sol.coefficients);
  for (std::size_t i = 0; i < y.data().size(); ++i) EXPECT_NEAR(fitted.data()[i], y.data()[i], 1e-13);
  EXPECT_NEAR(sol.residual_sq[0], 0.0, 1e-24);
  EXPECT_NEAR(sol.residual_sq[1], 0.0, 1e-24);
}

TEST(LeastSquares, ReproducesExactCoefficients) {
  std::mt19937_64 rng(5);
  const Matrix d = oracle::random_matrix(25, 5, rng);
  const Matrix alpha = oracle::random_matrix(5, 2, rng);
  const Matrix fit = fit_least_squares(d, multiply(d, alpha));
  for (std::size_t i = 0; i < alpha.data().size(); ++i) EXPECT_NEAR(fit.data()[i], alpha.data()[i], 1e-12);
}

TEST(LeastSquares, MatchesNormalEquationOracle) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix d = oracle::random_matrix(10, 3, rng);
    const Matrix y = oracle::random_matrix(10, 2, rng);
    const Matrix fit = fit_least_squares(d, y);
    const auto want = oracle::normal_equations(d, y);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_LT(oracle::relative_error(fit(r, c), want[r][c]), 1e-10);
  }
}

TEST(LeastSquares, RankDeficientDesignIsReported) {
  Matrix d = Matrix::from_rows({{1.0, 2.0, 2.0}, {1.0, 3.0, 3.0}, {1.0, 4.0, 4.0}, {1.0, 5.0, 5.0}});
  const Matrix y = Matrix::from_rows({{1.0}, {2.0}, {2.5}, {4.0}});
  EXPECT_EQ(solve_least_squares(d, y).status, SolveStatus::kRankDeficient);
  EXPECT_THROW(fit_least_squares(d, y), DegenerateDesignError);
  EXPECT_THROW(residual_quadratic(d, y.col(0)), DegenerateDesignError);
  // More columns than rows can never have full column rank.
  EXPECT_EQ(solve_least_squares(Matrix(2, 3, 1.0), Matrix(2, 1, 1.0)).status, SolveStatus::kRankDeficient);
}

TEST(LeastSquares, NearlyDependentColumnBelowToleranceIsRejected) {
  std::mt19937_64 rng(7);
  Matrix d = oracle::random_matrix(30, 3, rng);
  std::vector<double> dup(d.col(2).begin(), d.col(2).end());
  for (auto& v : dup) v *= 1.0 + 1e-14;
  d.append_col(dup);
  EXPECT_EQ(solve_least_squares(d, oracle::random_matrix(30, 1, rng)).status, SolveStatus::kRankDeficient);
}

TEST(LeastSquares, NonFiniteInputRejected) {
  Matrix d = Matrix::from_rows({{1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}});
  Matrix y = Matrix::from_rows({{0.0}, {std::numeric_limits<double>::quiet_NaN()}, {1.0}});
  EXPECT_EQ(solve_least_squares(d, y).status, SolveStatus::kNonFinite);
  EXPECT_THROW(residual_quadratic(d, y.col(0)), std::invalid_argument);
}

TEST(ResidualQuadratic, VanishesOnColumnSpace) {
  const Matrix d = Matrix::from_rows({{1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}});
  const std::vector<double> y{2.0, 2.5, 3.0, 3.5};
  EXPECT_NEAR(residual_quadratic(d, y), 0.0, 1e-26);
  EXPECT_GE(residual_quadratic(d, y), 0.0);
}

TEST(ResidualQuadratic, MeanCentering) {
  const Matrix d(2, 1, 1.0);
  const std::vector<double> y{1.0, -1.0};
  EXPECT_DOUBLE_EQ(residual_quadratic(d, y), 2.0);
}

TEST(ResidualQuadratic, MatchesExplicitProjection) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 25; ++rep) {
    const Matrix d = oracle::random_matrix(20, 4, rng);
    const Matrix y = oracle::random_matrix(20, 1, rng);
    const double want = oracle::projected_quadratics(d, y)[0];
    EXPECT_LT(oracle::relative_error(residual_quadratic(d, y.col(0)), want), 1e-8);
  }
}

// Property: the QR read-off equals the squared norm of the fitted residual.
TEST(ResidualQuadratic, EqualsNormOfFittedResidual) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> rows(6, 60);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = rows(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n - 1, 10))(rng);
    const Matrix d = oracle::random_matrix(n, m, rng);
    const Matrix y = oracle::random_matrix(n, 1, rng);
    const Matrix alpha = fit_least_squares(d, y);
    const Matrix fitted = multiply(d, alpha);
    double norm = 0.0;
    for (std::size_t t = 0; t < n; ++t) norm += (y(t, 0) - fitted(t, 0)) * (y(t, 0) - fitted(t, 0));
    EXPECT_LT(oracle::relative_error(residual_quadratic(d, y.col(0)), norm), 1e-10);
  }
}

// Property: projecting onto a larger column space never increases the residual.
TEST(ResidualQuadratic, MonotoneUnderColumnAppend) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 100; ++rep) {
    Matrix d = oracle::random_matrix(30, 2, rng);
    const Matrix y = oracle::random_matrix(30, 1, rng);
    double previous = residual_quadratic(d, y.col(0));
    for (int extra = 0; extra < 6; ++extra) {
      const Matrix col = oracle::random_matrix(30, 1, rng);
      d.append_col(col.col(0));
      const double now = residual_quadratic(d, y.col(0));
      EXPECT_LE(now, previous * (1.0 + 1e-12));
      previous = now;
    }
  }
}

TEST(ResidualQuadratic, VarianceEstimateMatchesTwoRoutes) {
  std::mt19937_64 rng(17);
  const Matrix d = oracle::random_matrix(40, 5, rng);
  const Matrix y = oracle::random_matrix(40, 1, rng);
  const double sigma_from_projection = residual_quadratic(d, y.col(0)) / 40.0;
  const Matrix fitted = multiply(d, fit_least_squares(d, y));
  double sigma_from_fit = 0.0;
  for (std::size_t t = 0; t < 40; ++t) sigma_from_fit += (y(t, 0) - fitted(t, 0)) * (y(t, 0) - fitted(t, 0));
  sigma_from_fit /= 40.0;
  EXPECT_LT(oracle::relative_error(sigma_from_projection, sigma_from_fit), 1e-10);
}

// ------------------------------------------------------------------ predict

TEST(Predict, AffineWithoutCentres) {
  const Matrix coeff = Matrix::from_rows({{0.5}, {2.0}, {-1.0}});
  const Matrix x = Matrix::from_rows({{1.0, 1.0}, {0.0, 3.0}});
  const Matrix out = predict(CentreSet(2), coeff, BasisKind::cubic(), x);
  EXPECT_DOUBLE_EQ(out(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(out(1, 0), -2.5);
}

TEST(Predict, InterpolatingFitReproducesTargets) {
  // N = m: one constant, one linear term, two centres over four points.
  const Matrix x = Matrix::from_rows({{0.0}, {1.0}, {2.5}, {4.0}});
  const Matrix y = Matrix::from_rows({{1.0}, {-2.0}, {0.5}, {3.0}});
  const CentreSet centres = centres_of({{0.7}, {3.1}});
  const Matrix coeff = fit_least_squares(build_design_matrix(x, centres, BasisKind::cubic()), y);
  const Matrix out = predict(centres, coeff, BasisKind::cubic(), x);
  for (std::size_t t = 0; t < 4; ++t) EXPECT_NEAR(out(t, 0), y(t, 0), 1e-10);
}

TEST(Predict, GaussianAtCentreReturnsAmplitude) {
  const Matrix coeff = Matrix::from_rows({{0.0}, {0.0}, {0.0}, {1.75}});
  const Matrix x = Matrix::from_rows({{0.2, 0.9}});
  EXPECT_DOUBLE_EQ(predict(centres_of({{0.2, 0.9}}), coeff, BasisKind::gaussian(1.3), x)(0, 0), 1.75);
}

TEST(Predict, CoefficientRowMismatchThrows) {
  EXPECT_THROW(predict(CentreSet(2), Matrix(2, 1), BasisKind::cubic(), Matrix(1, 2)), std::invalid_argument);
}

// ---------------------------------------------------------------- posterior

Dataset synthetic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix x = oracle::random_matrix(n, 2, rng);
  Matrix y(n, 2);
  std::normal_distribution<double> noise(0.0, 0.1);
  for (std::size_t t = 0; t < n; ++t) {
    y(t, 0) = std::sin(3.0 * x(t, 0)) + x(t, 1) * x(t, 1) + noise(rng);
    y(t, 1) = std::cos(2.0 * x(t, 1)) * x(t, 0) + noise(rng);
  }
  return Dataset(std::move(x), std::move(y));
}

TEST(LogMarginalPosterior, OrderPenaltyIsMinusC) {
  for (auto kind : {CriterionKind::kAic, CriterionKind::kBic, CriterionKind::kMdl}) {
    const Criterion crit{kind, 200, 2, 2};
    const std::vector<double> res{0.8, 1.7};
    const double c = calibration_constant(crit);
    EXPECT_DOUBLE_EQ(log_posterior_from_residuals(res, 200, c, 4) - log_posterior_from_residuals(res, 200, c, 3), -c);
  }
}

TEST(LogMarginalPosterior, NoCentresIsLinearRegressionTerm) {
  const Dataset data = synthetic(30, 1);
  const Criterion crit = Criterion::for_dataset(CriterionKind::kMdl, data);
  const Matrix d = build_design_matrix(data, CentreSet(2), BasisKind::cubic());
  const auto q = oracle::projected_quadratics(d, data.y());
  const double want = -15.0 * (std::log(q[0]) + std::log(q[1]));
  EXPECT_NEAR(log_marginal_posterior(data, CentreSet(2), BasisKind::cubic(), crit), want, 1e-9);
}

TEST(LogMarginalPosterior, DifferenceMatchesPenalisedLikelihoodRatio) {
  const Dataset data = synthetic(30, 2);
  std::mt19937_64 rng(4);
  const Criterion crit = Criterion::for_dataset(CriterionKind::kAic, data);
  for (int rep = 0; rep < 10; ++rep) {
    const CentreSet a = CentreSet::from_matrix(oracle::random_matrix(2, 2, rng));
    const CentreSet b = CentreSet::from_matrix(oracle::random_matrix(rep % 3 + 1, 2, rng));
    const double diff = log_marginal_posterior(data, a, BasisKind::cubic(), crit) -
                        log_marginal_posterior(data, b, BasisKind::cubic(), crit);
    const double score_a = oracle::penalized_log_score(build_design_matrix(data, a, BasisKind::cubic()), data.y(),
                                                       penalty(crit, a.size()));
    const double score_b = oracle::penalized_log_score(build_design_matrix(data, b, BasisKind::cubic()), data.y(),
                                                       penalty(crit, b.size()));
    // exp(diff) against the ratio of the two objectives.
    EXPECT_LT(oracle::relative_error(std::exp(diff), std::exp(score_a - score_b)), 1e-8);
  }
}

TEST(LogMarginalPosterior, OutsideSupportIsMinusInfinity) {
  const Dataset data = synthetic(30, 3);
  const BirthRegion region = BirthRegion::around(data.x(), 0.1);
  const Criterion crit = Criterion::for_dataset(CriterionKind::kMdl, data);
  const PosteriorModel model(data, BasisKind::cubic(), crit, region);
  const auto eval = model.evaluate(centres_of({{50.0, 0.0}}));
  EXPECT_EQ(eval.status, PosteriorStatus::kOutsideRegion);
  EXPECT_EQ(eval.log_post, kNegInf);
  EXPECT_EQ(log_marginal_posterior(data, centres_of({{50.0, 0.0}}), BasisKind::cubic(), crit, &region), kNegInf);
}

TEST(LogMarginalPosterior, ExactFitIsMinusInfinityWithDiagnostic) {
  // y is exactly affine in x, so the k = 0 projection annihilates it.
  const Matrix x = Matrix::from_rows({{0.0}, {1.0}, {2.0}, {3.0}, {4.0}});
  const Matrix y = Matrix::from_rows({{1.0}, {3.0}, {5.0}, {7.0}, {9.0}});
  const Dataset data(x, y);
  const PosteriorModel model(data, BasisKind::cubic(), Criterion::for_dataset(CriterionKind::kAic, data));
  const auto eval = model.evaluate(CentreSet(1));
  EXPECT_EQ(eval.status, PosteriorStatus::kZeroResidual);
  EXPECT_EQ(eval.log_post, kNegInf);
}

TEST(LogMarginalPosterior, DuplicateCentresAreDegenerate) {
  const Dataset data = synthetic(30, 5);
  const PosteriorModel model(data, BasisKind::cubic(), Criterion::for_dataset(CriterionKind::kAic, data));
  const auto eval = model.evaluate(centres_of({{0.1, 0.2}, {0.1, 0.2}}));
  EXPECT_EQ(eval.status, PosteriorStatus::kDegenerateDesign);
  EXPECT_EQ(eval.log_post, kNegInf);
}

TEST(Dataset, RejectsInvalidShapes) {
  EXPECT_THROW(Dataset(Matrix(0, 1), Matrix(0, 1)), std::invalid_argument);
  EXPECT_THROW(Dataset(Matrix(3, 1), Matrix(2, 1)), std::invalid_argument);
  Matrix bad(2, 1);
  bad(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(Dataset(bad, Matrix(2, 1)), std::invalid_argument);
}

}  // namespace
}  // namespace rjsa
