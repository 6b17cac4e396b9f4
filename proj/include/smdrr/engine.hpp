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

#ifndef SMDRR_ENGINE_HPP_
#define SMDRR_ENGINE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smdrr/policies.hpp"
#include "smdrr/workload.hpp"

namespace smdrr {

// One Gantt box: [start, end) on the CPU. An empty pid means the CPU idled.
struct Segment {
  std::optional<std::string> pid;
  Millis start = 0;
  Millis end = 0;

  bool is_idle() const { return !pid.has_value(); }
  Millis length() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct ProcessRecord {
  std::string pid;
  Millis arrival = 0;
  Millis burst = 0;
  Millis first_start = 0;
  Millis completion = 0;

  friend bool operator==(const ProcessRecord&, const ProcessRecord&) = default;
};

// One SMDRR round: when it began, its quantum and its dispatch order.
struct CycleRecord {
  Millis start = 0;
  Millis quantum = 0;
  std::vector<std::string> order;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct Trace {
  std::string workload_name;
  PolicyConfig policy;
  std::vector<Segment> segments;
  // Same order as the workload's submission order.
  std::vector<ProcessRecord> processes;
  // Populated for SMDRR only.
  std::vector<CycleRecord> cycles;

  Millis makespan() const { return segments.empty() ? 0 : segments.back().end; }
  Millis idle_time() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Runs `workload` to completion under `policy` on a single CPU with zero
// switch overhead.
//
//  * SMDRR: at the top of every cycle all processes with arrival <= now are
//    admitted and plan_cycle_smdrr() fixes order and quantum. Each planned
//    process runs min(quantum, remaining). Arrivals during a cycle wait for
//    the next cycle.
//  * RR: one FIFO queue; requeue order per rr_requeue_position().
//  * FCFS / SJF: non-preemptive.
//
// When nothing is runnable but arrivals are pending, an idle segment spans
// the gap. The first segment starts at the earliest arrival.
Trace simulate(const Workload& workload, const PolicyConfig& policy);

// Quantum chosen at every SMDRR cycle, or the single fixed quantum for RR.
// Throws std::invalid_argument for FCFS and SJF.
std::vector<Quantum> quantum_sequence(const Trace& trace);

// Returns a description of the first broken trace invariant, if any:
// contiguity, positive lengths, per-process conservation, no run before
// arrival, and first_start/completion consistent with the segments.
std::optional<std::string> check_trace(const Trace& trace);

// {"workload", "policy", "segments": [{"pid"|"idle", "start", "end"}],
//  "processes": [{"pid", "arrival", "burst", "first_start", "completion"}],
//  "cycles": [{"start", "quantum", "order"}]}
std::string trace_to_json(const Trace& trace);

// Throws InputError on malformed documents or traces that fail check_trace.
Trace trace_from_json(std::string_view text);

}  // namespace smdrr

#endif  // SMDRR_ENGINE_HPP_
