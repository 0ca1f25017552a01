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

#ifndef RJSA_DATASET_HPP_
#define RJSA_DATASET_HPP_

#include <cstddef>

#include "rjsa/matrix.hpp"

namespace rjsa {

/// Paired inputs (N x d) and targets (N x c). Immutable once built; the
/// constructor rejects empty, mismatched or non-finite data.
class Dataset {
 public:
  Dataset(Matrix x, Matrix y);

  const Matrix& x() const { return x_; }
  const Matrix& y() const { return y_; }
  std::size_t size() const { return x_.rows(); }
  std::size_t input_dim() const { return x_.cols(); }
  std::size_t output_dim() const { return y_.cols(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  Matrix x_;
  Matrix y_;
};

}  // namespace rjsa

#endif  // RJSA_DATASET_HPP_
