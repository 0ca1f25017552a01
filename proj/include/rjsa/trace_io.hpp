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

#ifndef RJSA_TRACE_IO_HPP_
#define RJSA_TRACE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "rjsa/annealing.hpp"

namespace rjsa {

/// Column order shared by both trace formats:
/// iteration, temperature, k, log_post, best_log_post, move, inner_accepted,
/// outer_accepted, train_mse, test_mse.
inline constexpr const char* kTraceColumns =
    "iteration,temperature,k,log_post,best_log_post,move,inner_accepted,outer_accepted,train_mse,test_mse";

/// One JSON object per line; test_mse is null when not tracked.
void write_trace_jsonl(std::ostream& out, std::span<const TraceRecord> trace);
/// Header row then one row per record; test_mse is empty when not tracked,
/// booleans are 0/1 and reals carry 17 significant digits.
void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace);

/// Picks the format from the extension: ".csv" gives CSV, anything else JSON-lines.
void write_trace_file(const std::filesystem::path& path, std::span<const TraceRecord> trace);

std::string trace_record_json(const TraceRecord& rec);

}  // namespace rjsa

#endif  // RJSA_TRACE_IO_HPP_
