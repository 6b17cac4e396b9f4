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

#ifndef SMDRR_POLICIES_HPP_
#define SMDRR_POLICIES_HPP_

#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smdrr/workload.hpp"

namespace smdrr {

// A time slice in milliseconds, always >= 1.
class Quantum {
 public:
  explicit Quantum(Millis value);
  Millis value() const { return value_; }
  friend auto operator<=>(const Quantum&, const Quantum&) = default;

 private:
  Millis value_;
};

namespace policy {

// Subcontrary-mean dynamic round robin: every cycle re-sorts the ready set by
// remaining burst and uses the ceiling of the harmonic mean of the remaining
// bursts as the quantum for the whole cycle.
struct Smdrr {
  friend bool operator==(const Smdrr&, const Smdrr&) = default;
};

// Fixed-quantum round robin over a single FIFO queue.
struct RoundRobin {
  Quantum quantum;
  friend bool operator==(const RoundRobin&, const RoundRobin&) = default;
};

// Non-preemptive, arrival order.
struct Fcfs {
  friend bool operator==(const Fcfs&, const Fcfs&) = default;
};

// Non-preemptive shortest burst among arrived processes.
struct Sjf {
  friend bool operator==(const Sjf&, const Sjf&) = default;
};

}  // namespace policy

using PolicyConfig = std::variant<policy::Smdrr, policy::RoundRobin, policy::Fcfs, policy::Sjf>;

// Parses `smdrr`, `rr:<quantum>`, `fcfs`, `sjf`. Throws std::invalid_argument.
PolicyConfig parse_policy(std::string_view text);

// Inverse of parse_policy: "smdrr", "rr:20", ...
std::string policy_spelling(const PolicyConfig& p);

// Table label: "SMDRR", "RR", "FCFS", "SJF".
std::string policy_label(const PolicyConfig& p);

// Cycle-based policies report a quantum sequence; FCFS and SJF do not.
bool has_quantum(const PolicyConfig& p);

// A runnable process as the policies see it.
struct ReadyEntry {
  std::string pid;
  Millis remaining = 1;
  Millis arrival = 0;
  std::size_t submission_index = 0;

  friend bool operator==(const ReadyEntry&, const ReadyEntry&) = default;
};

struct CyclePlan {
  std::vector<std::string> order;
  Quantum quantum;

  friend bool operator==(const CyclePlan&, const CyclePlan&) = default;
};

// ceil(n / sum(1 / x_i)) computed in exact rational arithmetic. The result
// always lies in [min(remaining), max(remaining)]. Throws
// std::invalid_argument on an empty list or a non-positive element.
Quantum harmonic_mean_quantum(std::span<const Millis> remaining);

// Orders the ready set by ascending remaining burst, then arrival, then
// submission index, and attaches the harmonic-mean quantum of the remaining
// bursts. Throws std::invalid_argument on an empty ready set.
CyclePlan plan_cycle_smdrr(std::span<const ReadyEntry> ready);

// Round-robin requeue after a preemption. Processes that arrived while the
// preempted process ran (including exactly at the preemption instant) join
// first, ordered by arrival then submission index; the preempted process
// goes to the tail. Throws std::invalid_argument if `preempted` has no work
// left.
std::deque<ReadyEntry> rr_requeue_position(std::deque<ReadyEntry> queue, ReadyEntry preempted,
                                           std::vector<ReadyEntry> arrivals_during_run);

}  // namespace smdrr

#endif  // SMDRR_POLICIES_HPP_
