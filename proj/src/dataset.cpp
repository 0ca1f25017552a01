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

#include "rjsa/dataset.hpp"

#include <stdexcept>
#include <string>

namespace rjsa {

Dataset::Dataset(Matrix x, Matrix y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.rows() == 0 || x_.cols() == 0 || y_.cols() == 0) {
    throw std::invalid_argument("Dataset: need N >= 1, d >= 1 and c >= 1");
  }
  if (x_.rows() != y_.rows()) {
    throw std::invalid_argument("Dataset: x has " + std::to_string(x_.rows()) + " rows but y has " +
                                std::to_string(y_.rows()));
  }
  if (!x_.all_finite() || !y_.all_finite()) {
    throw std::invalid_argument("Dataset: non-finite entry");
  }
}

}  // namespace rjsa
