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

#include "rjsa/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "rjsa/errors.hpp"

namespace rjsa {
namespace {

void put_real(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

}  // namespace

std::string trace_record_json(const TraceRecord& rec) {
  nlohmann::ordered_json j;
  j["iteration"] = rec.iteration;
  j["temperature"] = rec.temperature;
  j["k"] = rec.k;
  j["log_post"] = rec.log_post;
  j["best_log_post"] = rec.best_log_post;
  j["move"] = move_name(rec.move);
  j["inner_accepted"] = rec.inner_accepted;
  j["outer_accepted"] = rec.outer_accepted;
  j["train_mse"] = rec.train_mse;
  j["test_mse"] = rec.test_mse ? nlohmann::ordered_json(*rec.test_mse) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

void write_trace_jsonl(std::ostream& out, std::span<const TraceRecord> trace) {
  for (const auto& rec : trace) out << trace_record_json(rec) << '\n';
}

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace) {
  std::string buf = kTraceColumns;
  buf += '\n';
  for (const auto& rec : trace) {
    buf += std::to_string(rec.iteration);
    buf += ',';
    put_real(buf, rec.temperature);
    buf += ',' + std::to_string(rec.k) + ',';
    put_real(buf, rec.log_post);
    buf += ',';
    put_real(buf, rec.best_log_post);
    buf += ',';
    buf += move_name(rec.move);
    buf += rec.inner_accepted ? ",1" : ",0";
    buf += rec.outer_accepted ? ",1," : ",0,";
    put_real(buf, rec.train_mse);
    buf += ',';
    if (rec.test_mse) put_real(buf, *rec.test_mse);
    buf += '\n';
  }
  out << buf;
}

void write_trace_file(const std::filesystem::path& path, std::span<const TraceRecord> trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write trace '" + path.string() + "'");
  if (path.extension() == ".csv") {
    write_trace_csv(out, trace);
  } else {
    write_trace_jsonl(out, trace);
  }
  if (!out.flush()) throw DataError("write failed for trace '" + path.string() + "'");
}

}  // namespace rjsa
