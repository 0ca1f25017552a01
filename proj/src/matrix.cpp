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

#include "rjsa/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rjsa/kernels.hpp"

namespace rjsa {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.begin()->size();
  Matrix out(n, m);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    std::size_t c = 0;
    for (double v : row) out(r, c++) = v;
    ++r;
  }
  return out;
}

std::vector<double> Matrix::row(std::size_t r) const {
  std::vector<double> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

void Matrix::append_col(std::span<const double> values) {
  if (cols_ == 0 && data_.empty()) rows_ = values.size();
  if (values.size() != rows_) throw std::invalid_argument("Matrix::append_col: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++cols_;
}

void Matrix::erase_col(std::size_t c) {
  if (c >= cols_) throw std::out_of_range("Matrix::erase_col");
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(c * rows_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(rows_));
  --cols_;
}

Matrix Matrix::slice_rows(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw std::out_of_range("Matrix::slice_rows");
  Matrix out(end - begin, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::copy(col(c).begin() + static_cast<std::ptrdiff_t>(begin),
              col(c).begin() + static_cast<std::ptrdiff_t>(end), out.col(c).begin());
  }
  return out;
}

Matrix Matrix::take_rows(std::span<const std::size_t> index) const {
  Matrix out(index.size(), cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t i = 0; i < index.size(); ++i) out(i, c) = (*this)(index[i], c);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) out(c, r) = (*this)(r, c);
  return out;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto dst = out.col(j);
    for (std::size_t p = 0; p < a.cols(); ++p) {
      k.axpy(b(p, j), a.col(p).data(), dst.data(), a.rows());
    }
  }
  return out;
}

}  // namespace rjsa
