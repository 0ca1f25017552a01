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

#include "rjsa/data_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rjsa/errors.hpp"
#include "rjsa/kernels.hpp"

namespace rjsa {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

// Counts a run of `prefix1, prefix2, ...` columns starting at `pos`.
std::size_t count_prefixed(const std::vector<std::string>& header, std::size_t pos, char prefix) {
  std::size_t n = 0;
  while (pos + n < header.size() && header[pos + n] == std::string(1, prefix) + std::to_string(n + 1)) ++n;
  return n;
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

}  // namespace

std::array<double, 2> robot_arm_position(double x1, double x2) {
  return {2.0 * std::cos(x1) + 1.3 * std::cos(x1 + x2), 2.0 * std::sin(x1) + 1.3 * std::sin(x1 + x2)};
}

Dataset generate_robot_arm(std::size_t n, double sigma, Rng& rng) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be >= 0");
  Matrix x(n, 2);
  Matrix y(n, 2);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t t = 0; t < n; ++t) {
    const double sign = uniform01(rng) < 0.5 ? -1.0 : 1.0;
    const double x1 = sign * (0.453 + (1.932 - 0.453) * uniform01(rng));
    const double x2 = 0.534 + (3.142 - 0.534) * uniform01(rng);
    const auto pos = robot_arm_position(x1, x2);
    x(t, 0) = x1;
    x(t, 1) = x2;
    y(t, 0) = pos[0] + sigma * noise(rng);
    y(t, 1) = pos[1] + sigma * noise(rng);
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset read_csv(std::istream& in, const std::string& source, std::optional<std::size_t> d,
                 std::optional<std::size_t> c) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw DataError(where(source, 1) + "missing header row");
  ++line_no;
  auto header = split_fields(line);
  for (auto& h : header) h = trim(h);
  const std::size_t nx = count_prefixed(header, 0, 'x');
  const std::size_t ny = count_prefixed(header, nx, 'y');
  if (nx == 0 || ny == 0 || nx + ny != header.size()) {
    throw DataError(where(source, 1) + "header must be x1..xd,y1..yc");
  }
  if ((d && *d != nx) || (c && *c != ny)) {
    throw DataError(where(source, 1) + "header has d=" + std::to_string(nx) + ", c=" + std::to_string(ny) +
                    " but d=" + std::to_string(d.value_or(nx)) + ", c=" + std::to_string(c.value_or(ny)) +
                    " was expected");
  }
  const std::size_t width = nx + ny;

  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != width) {
      throw DataError(where(source, line_no) + "expected " + std::to_string(width) + " fields, found " +
                      std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < width; ++i) {
      const std::string f = trim(fields[i]);
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw DataError(where(source, line_no) + "field " + std::to_string(i + 1) + " is not a number: '" + f + "'");
      }
      if (!std::isfinite(v)) {
        throw DataError(where(source, line_no) + "field " + std::to_string(i + 1) + " is not finite");
      }
      values.push_back(v);
    }
  }
  const std::size_t n = values.size() / width;
  if (n == 0) throw DataError(source + ": no data rows");
  Matrix x(n, nx);
  Matrix y(n, ny);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < nx; ++i) x(t, i) = values[t * width + i];
    for (std::size_t i = 0; i < ny; ++i) y(t, i) = values[t * width + nx + i];
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset load_csv(const std::filesystem::path& path, std::size_t d, std::size_t c) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_csv(in, path.string(), d, c);
}

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_csv(in, path.string());
}

void write_csv(std::ostream& out, const Dataset& data) {
  std::string buf;
  for (std::size_t i = 0; i < data.input_dim(); ++i) buf += (i ? ",x" : "x") + std::to_string(i + 1);
  for (std::size_t i = 0; i < data.output_dim(); ++i) buf += ",y" + std::to_string(i + 1);
  buf += '\n';
  for (std::size_t t = 0; t < data.size(); ++t) {
    for (std::size_t i = 0; i < data.input_dim(); ++i) {
      if (i) buf += ',';
      append_number(buf, data.x()(t, i));
    }
    for (std::size_t i = 0; i < data.output_dim(); ++i) {
      buf += ',';
      append_number(buf, data.y()(t, i));
    }
    buf += '\n';
  }
  out << buf;
}

void write_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_csv(out, data);
  if (!out.flush()) throw DataError("write failed for '" + path.string() + "'");
}

std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec) {
  const std::size_t n = data.size();
  if (spec.n_train == 0 || spec.n_train >= n) {
    throw std::invalid_argument("split: n_train must satisfy 0 < n_train < N (N=" + std::to_string(n) + ")");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (spec.shuffle_seed) {
    Rng rng(*spec.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const std::span<const std::size_t> all(order);
  const auto head = all.first(spec.n_train);
  const auto tail = all.subspan(spec.n_train);
  return {Dataset(data.x().take_rows(head), data.y().take_rows(head)),
          Dataset(data.x().take_rows(tail), data.y().take_rows(tail))};
}

double mean_squared_error(const Matrix& predictions, const Matrix& targets) {
  if (predictions.rows() != targets.rows() || predictions.cols() != targets.cols()) {
    throw std::invalid_argument("mean_squared_error: shape mismatch");
  }
  if (predictions.empty()) throw std::invalid_argument("mean_squared_error: empty input");
  const auto& kern = kernels::active();
  double total = 0.0;
  for (std::size_t i = 0; i < targets.cols(); ++i) {
    total += kern.sq_diff_sum(predictions.col(i).data(), targets.col(i).data(), targets.rows());
  }
  return total / static_cast<double>(targets.rows() * targets.cols());
}

}  // namespace rjsa
