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

#ifndef SMDRR_METRICS_HPP_
#define SMDRR_METRICS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "smdrr/engine.hpp"
#include "smdrr/rational.hpp"

namespace smdrr {

// How turnaround is measured.
//  kStandard:  completion - arrival.
//  kPaperZero: completion, i.e. from t = 0 regardless of arrival. This is
//              the convention under which the published comparison tables
//              for staggered arrivals are reproducible.
// The two agree whenever every arrival is 0.
enum class Convention { kStandard, kPaperZero };

// "standard" / "paper"; throws std::invalid_argument otherwise.
Convention parse_convention(std::string_view text);
std::string convention_name(Convention c);

struct ProcessMetrics {
  std::string pid;
  Millis turnaround = 0;
  Millis waiting = 0;   // turnaround - burst
  Millis response = 0;  // first_start - arrival, under either convention

  friend bool operator==(const ProcessMetrics&, const ProcessMetrics&) = default;
};

struct MetricsReport {
  Convention convention = Convention::kStandard;
  std::vector<ProcessMetrics> processes;
  Rational att;
  Rational awt;
  std::int64_t cs = 0;
  Rational avg_response;
  Millis makespan = 0;
  Rational cpu_utilization;
  Rational throughput;  // processes per ms

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// Dispatch boundaries: (number of process segments) - 1. A process
// re-dispatched right after its own quantum expires still counts, and idle
// segments are skipped over, so P1 | idle | P2 is one switch. Throws
// std::invalid_argument on a trace with no process segments.
std::int64_t context_switches(const Trace& trace);

MetricsReport compute_metrics(const Trace& trace, Convention convention);

// Fields: convention, processes[], att, awt, cs, avg_response, makespan,
// cpu_utilization, throughput. Rationals are decimal strings (to_decimal).
std::string metrics_to_json(const MetricsReport& report);

}  // namespace smdrr

#endif  // SMDRR_METRICS_HPP_
