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

#ifndef RJSA_LEAST_SQUARES_HPP_
#define RJSA_LEAST_SQUARES_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rjsa/matrix.hpp"

namespace rjsa {

/// Raised when the design has numerically dependent columns (or N < m).
class DegenerateDesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A column is treated as dependent when its pivot falls below this
/// fraction of the largest pivot.
inline constexpr double kRankTolerance = 1e-10;

enum class SolveStatus { kOk, kRankDeficient, kNonFinite };

/// Column-pivoted Householder QR of the design, applied to every column of y.
struct LeastSquaresSolution {
  SolveStatus status = SolveStatus::kOk;
  std::size_t rank = 0;
  Matrix coefficients;              // m x c; empty unless requested and status is kOk
  std::vector<double> residual_sq;  // per output, y_i' P y_i = ||y_i - D a_i||^2
};

/// Never throws on rank deficiency or non-finite input; inspect `status`.
LeastSquaresSolution solve_least_squares(const Matrix& design, const Matrix& y,
                                         bool want_coefficients = true);

/// Coefficients minimising ||y_i - D a_i|| for each output column.
/// Throws DegenerateDesignError or std::invalid_argument (non-finite input).
Matrix fit_least_squares(const Matrix& design, const Matrix& y);

/// y' (I - D (D'D)^-1 D') y read off the QR factorisation; never negative.
double residual_quadratic(const Matrix& design, std::span<const double> y_col);

}  // namespace rjsa

#endif  // RJSA_LEAST_SQUARES_HPP_
