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

#ifndef RJSA_DATA_IO_HPP_
#define RJSA_DATA_IO_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>

#include "rjsa/dataset.hpp"
#include "rjsa/region.hpp"

namespace rjsa {

/// Noise-free end position of the two-link arm with link lengths 2.0 and 1.3.
std::array<double, 2> robot_arm_position(double x1, double x2);

/// n samples of the robot-arm mapping with N(0, sigma^2) noise on each output.
/// x1 ~ U([-1.932, -0.453] u [0.453, 1.932]), x2 ~ U[0.534, 3.142].
Dataset generate_robot_arm(std::size_t n, double sigma, Rng& rng);

/// Reads `x1..xd,y1..yc` CSV. Throws DataError naming the file and line.
Dataset load_csv(const std::filesystem::path& path, std::size_t d, std::size_t c);
/// Same, with d and c inferred from the header.
Dataset load_csv(const std::filesystem::path& path);
Dataset read_csv(std::istream& in, const std::string& source_name, std::optional<std::size_t> d = std::nullopt,
                 std::optional<std::size_t> c = std::nullopt);

/// Writes with 17 significant digits so that load_csv reproduces every value.
void write_csv(std::ostream& out, const Dataset& data);
void write_csv(const std::filesystem::path& path, const Dataset& data);

/// Train/test partition. Without a shuffle seed the first n_train rows train
/// and the rest test.
struct SplitSpec {
  std::size_t n_train = 0;
  std::optional<std::uint64_t> shuffle_seed;
};

/// Throws std::invalid_argument unless 0 < n_train < N.
std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec);

/// Grand mean of squared differences over all M x c entries.
double mean_squared_error(const Matrix& predictions, const Matrix& targets);

}  // namespace rjsa

#endif  // RJSA_DATA_IO_HPP_
