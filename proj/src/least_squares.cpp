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

#include "rjsa/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rjsa/kernels.hpp"

namespace rjsa {

LeastSquaresSolution solve_least_squares(const Matrix& design, const Matrix& y, bool want_coefficients) {
  const std::size_t n = design.rows();
  const std::size_t m = design.cols();
  const std::size_t c = y.cols();
  if (y.rows() != n) throw std::invalid_argument("least squares: design and targets differ in row count");

  LeastSquaresSolution out;
  if (!design.all_finite() || !y.all_finite()) {
    out.status = SolveStatus::kNonFinite;
    return out;
  }
  if (m > n || m == 0) {
    out.status = SolveStatus::kRankDeficient;
    return out;
  }

  const auto& kern = kernels::active();
  Matrix a = design;
  Matrix qty = y;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> diag(m);
  std::vector<double> v(n);

  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t len = n - p;
    // Pivot on the largest trailing column norm; ties keep the lowest index.
    std::size_t best = p;
    double best_norm = -1.0;
    for (std::size_t j = p; j < m; ++j) {
      const double* col = a.col(j).data() + p;
      const double norm = kern.dot(col, col, len);
      if (norm > best_norm) {
        best_norm = norm;
        best = j;
      }
    }
    if (best != p) {
      std::swap_ranges(a.col(p).begin(), a.col(p).end(), a.col(best).begin());
      std::swap(perm[p], perm[best]);
    }

    const double norm = std::sqrt(best_norm);
    const double x0 = a(p, p);
    const double alpha = x0 >= 0.0 ? -norm : norm;
    diag[p] = alpha;
    if (norm == 0.0 || std::abs(alpha) < kRankTolerance * std::abs(diag[0])) {
      out.status = SolveStatus::kRankDeficient;
      out.rank = p;
      return out;
    }

    std::copy(a.col(p).begin() + static_cast<std::ptrdiff_t>(p), a.col(p).end(), v.begin());
    v[0] = x0 - alpha;
    const double vtv = kern.dot(v.data(), v.data(), len);
    const double beta = 2.0 / vtv;
    for (std::size_t j = p + 1; j < m; ++j) {
      double* col = a.col(j).data() + p;
      kern.axpy(-beta * kern.dot(v.data(), col, len), v.data(), col, len);
    }
    for (std::size_t i = 0; i < c; ++i) {
      double* col = qty.col(i).data() + p;
      kern.axpy(-beta * kern.dot(v.data(), col, len), v.data(), col, len);
    }
  }

  out.rank = m;
  out.residual_sq.resize(c);
  for (std::size_t i = 0; i < c; ++i) {
    const double* tail = qty.col(i).data() + m;
    out.residual_sq[i] = std::max(0.0, kern.dot(tail, tail, n - m));
  }

  if (want_coefficients) {
    out.coefficients = Matrix(m, c);
    std::vector<double> z(m);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t p = m; p-- > 0;) {
        double s = qty(p, i);
        for (std::size_t j = p + 1; j < m; ++j) s -= a(p, j) * z[j];
        z[p] = s / diag[p];
      }
      for (std::size_t p = 0; p < m; ++p) out.coefficients(perm[p], i) = z[p];
    }
  }
  return out;
}

namespace {

void raise_on_failure(const LeastSquaresSolution& sol) {
  switch (sol.status) {
    case SolveStatus::kOk:
      return;
    case SolveStatus::kNonFinite:
      throw std::invalid_argument("least squares: non-finite entry in design or targets");
    case SolveStatus::kRankDeficient:
      throw DegenerateDesignError("least squares: design matrix is rank deficient (numerical rank " +
                                  std::to_string(sol.rank) + ")");
  }
}

}  // namespace

Matrix fit_least_squares(const Matrix& design, const Matrix& y) {
  auto sol = solve_least_squares(design, y, true);
  raise_on_failure(sol);
  return std::move(sol.coefficients);
}

double residual_quadratic(const Matrix& design, std::span<const double> y_col) {
  Matrix y(y_col.size(), 0);
  y.append_col(y_col);
  const auto sol = solve_least_squares(design, y, false);
  raise_on_failure(sol);
  return sol.residual_sq[0];
}

}  // namespace rjsa
