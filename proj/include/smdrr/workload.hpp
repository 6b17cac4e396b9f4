// Copyright 2026 The SMDRR Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMDRR_WORKLOAD_HPP_
#define SMDRR_WORKLOAD_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smdrr {

// All times are integer milliseconds.
using Millis = std::int64_t;

// Raised for any invalid workload or generator input. `row` is 1-based and
// counts the CSV header (or the JSON array index + 1); `field` names the
// offending column when one can be singled out.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::optional<std::size_t> row = std::nullopt,
             std::string field = {});

  std::optional<std::size_t> row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::optional<std::size_t> row_;
  std::string field_;
};

struct ProcessSpec {
  std::string pid;
  Millis arrival = 0;
  Millis burst = 1;

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

// A validated, non-empty process set. List order is submission order and is
// the final tie-break everywhere a policy has to order equal candidates.
class Workload {
 public:
  // Throws InputError on empty input, duplicate or empty pids, burst < 1 or
  // arrival < 0. Row numbers in errors are list index + 1.
  Workload(std::string name, std::vector<ProcessSpec> processes);

  const std::string& name() const { return name_; }
  const std::vector<ProcessSpec>& processes() const { return processes_; }
  std::size_t size() const { return processes_.size(); }
  const ProcessSpec& operator[](std::size_t i) const { return processes_[i]; }

  // Submission index of `pid`; throws std::out_of_range if absent.
  std::size_t index_of(std::string_view pid) const;

  friend bool operator==(const Workload&, const Workload&) = default;

 private:
  std::string name_;
  std::vector<ProcessSpec> processes_;
};

enum class WorkloadFormat { kCsv, kJson };

// Parses "csv" / "json"; throws InputError otherwise.
WorkloadFormat parse_workload_format(std::string_view name);

// CSV: header `pid,arrival,burst`, one process per line, base-10 integers.
// JSON: {"name": ..., "processes": [{"pid", "arrival", "burst"}, ...]}.
// CSV has no name field, so `csv_name` is used for it.
Workload parse_workload(std::string_view text, WorkloadFormat format,
                        std::string_view csv_name = "workload");

std::string serialize_workload(const Workload& w, WorkloadFormat format);

struct GeneratorSpec {
  std::size_t count = 1;
  Millis burst_min = 1;
  Millis burst_max = 1;
  Millis arrival_min = 0;
  Millis arrival_max = 0;
  std::uint64_t seed = 0;
};

// Throws InputError if the ranges are empty or out of domain.
void validate(const GeneratorSpec& spec);

// Deterministic uniform workload. Draws come from std::mt19937_64 seeded with
// `spec.seed`; for each process in turn an arrival and then a burst are taken
// with uniform_below(). Processes are then stably sorted by arrival and named
// P1..Pn in that order. The workload is named "generated-<seed>".
Workload generate_workload(const GeneratorSpec& spec);

// Maps raw 64-bit engine output onto [0, bound) without modulo bias: draws
// x < (2^64 mod bound) are rejected, then x mod bound is returned. Exposed so
// other implementations can reproduce generated files.
template <typename Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = bound == 0 ? 0 : (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = engine();
    if (x >= limit) return x % bound;
  }
}

// The built-in experimental cases, 1 through 4. Throws InputError otherwise.
Workload paper_case(int id);

}  // namespace smdrr

#endif  // SMDRR_WORKLOAD_HPP_
