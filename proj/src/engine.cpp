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

#include "smdrr/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "json.hpp"

namespace smdrr {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Shared bookkeeping for every policy: the clock, admission in arrival
// order, and segment/record emission.
class Machine {
 public:
  explicit Machine(const Workload& w) : workload_(w), remaining_(w.size()), started_(w.size()) {
    arrival_order_.resize(w.size());
    std::iota(arrival_order_.begin(), arrival_order_.end(), std::size_t{0});
    std::ranges::stable_sort(arrival_order_, [&w](std::size_t a, std::size_t b) {
      return w[a].arrival < w[b].arrival;
    });
    for (std::size_t i = 0; i < w.size(); ++i) {
      remaining_[i] = w[i].burst;
      trace_.processes.push_back({w[i].pid, w[i].arrival, w[i].burst, 0, 0});
    }
    trace_.workload_name = w.name();
    now_ = w[arrival_order_.front()].arrival;
  }

  Millis now() const { return now_; }
  Millis remaining(std::size_t i) const { return remaining_[i]; }
  const ProcessSpec& spec(std::size_t i) const { return workload_[i]; }
  bool all_done() const { return done_ == workload_.size(); }
  bool arrivals_pending() const { return next_arrival_ < arrival_order_.size(); }

  // Indices of processes with arrival <= now not yet admitted, in arrival
  // order (ties by submission index).
  std::vector<std::size_t> admit() {
    std::vector<std::size_t> out;
    while (arrivals_pending() && spec(arrival_order_[next_arrival_]).arrival <= now_) {
      out.push_back(arrival_order_[next_arrival_++]);
    }
    return out;
  }

  void idle_until_next_arrival() {
    const Millis until = spec(arrival_order_[next_arrival_]).arrival;
    if (until > now_) {
      trace_.segments.push_back({std::nullopt, now_, until});
      now_ = until;
    }
  }

  // Runs process i for up to `slice` ms; returns true if it completed.
  bool run(std::size_t i, Millis slice) {
    const Millis ran = std::min(slice, remaining_[i]);
    if (!started_[i]) {
      started_[i] = true;
      trace_.processes[i].first_start = now_;
    }
    trace_.segments.push_back({spec(i).pid, now_, now_ + ran});
    now_ += ran;
    remaining_[i] -= ran;
    if (remaining_[i] == 0) {
      trace_.processes[i].completion = now_;
      ++done_;
      return true;
    }
    return false;
  }

  ReadyEntry entry(std::size_t i) const { return {spec(i).pid, remaining_[i], spec(i).arrival, i}; }

  Trace finish(PolicyConfig policy) && {
    trace_.policy = std::move(policy);
    return std::move(trace_);
  }

  Trace& trace() { return trace_; }

 private:
  const Workload& workload_;
  std::vector<std::size_t> arrival_order_;
  std::vector<Millis> remaining_;
  std::vector<bool> started_;
  std::size_t next_arrival_ = 0;
  std::size_t done_ = 0;
  Millis now_ = 0;
  Trace trace_;
};

Trace run_smdrr(const Workload& w) {
  Machine m(w);
  std::unordered_map<std::string_view, std::size_t> by_pid;
  for (std::size_t i = 0; i < w.size(); ++i) by_pid.emplace(w[i].pid, i);

  std::vector<std::size_t> ready;
  while (!m.all_done()) {
    for (std::size_t i : m.admit()) ready.push_back(i);
    if (ready.empty()) {
      m.idle_until_next_arrival();
      continue;
    }

    std::vector<ReadyEntry> entries;
    for (std::size_t i : ready) entries.push_back(m.entry(i));
    CyclePlan plan = plan_cycle_smdrr(entries);
    m.trace().cycles.push_back({m.now(), plan.quantum.value(), plan.order});

    std::vector<std::size_t> still_ready;
    for (const auto& pid : plan.order) {
      const std::size_t i = by_pid.at(pid);
      if (!m.run(i, plan.quantum.value())) still_ready.push_back(i);
    }
    ready = std::move(still_ready);
  }
  return std::move(m).finish(policy::Smdrr{});
}

Trace run_round_robin(const Workload& w, Quantum quantum) {
  Machine m(w);
  std::deque<ReadyEntry> queue;
  auto admitted = [&m]() {
    std::vector<ReadyEntry> out;
    for (std::size_t i : m.admit()) out.push_back(m.entry(i));
    return out;
  };
  for (auto& e : admitted()) queue.push_back(std::move(e));

  while (!m.all_done()) {
    if (queue.empty()) {
      m.idle_until_next_arrival();
      for (auto& e : admitted()) queue.push_back(std::move(e));
      continue;
    }
    const std::size_t i = queue.front().submission_index;
    queue.pop_front();
    const bool completed = m.run(i, quantum.value());
    std::vector<ReadyEntry> arrivals = admitted();
    if (completed) {
      for (auto& e : arrivals) queue.push_back(std::move(e));
    } else {
      queue = rr_requeue_position(std::move(queue), m.entry(i), std::move(arrivals));
    }
  }
  return std::move(m).finish(policy::RoundRobin{quantum});
}

// FCFS and SJF differ only in which arrived process is picked next.
template <typename Better>
Trace run_non_preemptive(const Workload& w, PolicyConfig policy, Better better) {
  Machine m(w);
  std::vector<std::size_t> ready;
  while (!m.all_done()) {
    for (std::size_t i : m.admit()) ready.push_back(i);
    if (ready.empty()) {
      m.idle_until_next_arrival();
      continue;
    }
    auto pick = std::ranges::min_element(ready, [&](std::size_t a, std::size_t b) {
      return better(w[a], a, w[b], b);
    });
    const std::size_t i = *pick;
    ready.erase(pick);
    m.run(i, w[i].burst);
  }
  return std::move(m).finish(std::move(policy));
}

ordered_json segment_json(const Segment& s) {
  ordered_json j;
  if (s.pid) {
    j["pid"] = *s.pid;
  } else {
    j["idle"] = true;
  }
  j["start"] = s.start;
  j["end"] = s.end;
  return j;
}

}  // namespace

Millis Trace::idle_time() const {
  Millis idle = 0;
  for (const auto& s : segments) {
    if (s.is_idle()) idle += s.length();
  }
  return idle;
}

Trace simulate(const Workload& workload, const PolicyConfig& policy) {
  struct {
    const Workload& w;
    Trace operator()(const policy::Smdrr&) const { return run_smdrr(w); }
    Trace operator()(const policy::RoundRobin& rr) const { return run_round_robin(w, rr.quantum); }
    Trace operator()(const policy::Fcfs& p) const {
      return run_non_preemptive(w, p, [](const ProcessSpec& a, std::size_t ia,
                                         const ProcessSpec& b, std::size_t ib) {
        return std::tie(a.arrival, ia) < std::tie(b.arrival, ib);
      });
    }
    Trace operator()(const policy::Sjf& p) const {
      return run_non_preemptive(w, p, [](const ProcessSpec& a, std::size_t ia,
                                         const ProcessSpec& b, std::size_t ib) {
        return std::tie(a.burst, a.arrival, ia) < std::tie(b.burst, b.arrival, ib);
      });
    }
  } visitor{workload};
  return std::visit(visitor, policy);
}

std::vector<Quantum> quantum_sequence(const Trace& trace) {
  if (const auto* rr = std::get_if<policy::RoundRobin>(&trace.policy)) return {rr->quantum};
  if (!std::holds_alternative<policy::Smdrr>(trace.policy)) {
    throw std::invalid_argument("policy " + policy_spelling(trace.policy) +
                                " has no time quantum");
  }
  std::vector<Quantum> out;
  for (const auto& c : trace.cycles) out.emplace_back(c.quantum);
  return out;
}

std::optional<std::string> check_trace(const Trace& trace) {
  if (trace.processes.empty()) return "trace has no processes";
  if (trace.segments.empty()) return "trace has no segments";

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < trace.processes.size(); ++i) {
    if (!index.emplace(trace.processes[i].pid, i).second) {
      return "duplicate process '" + trace.processes[i].pid + "'";
    }
  }

  Millis min_arrival = trace.processes.front().arrival;
  for (const auto& p : trace.processes) min_arrival = std::min(min_arrival, p.arrival);
  if (trace.segments.front().start != min_arrival) {
    return "first segment must start at the earliest arrival " + std::to_string(min_arrival);
  }

  std::vector<Millis> ran(trace.processes.size(), 0);
  std::vector<std::optional<Millis>> first(trace.processes.size());
  std::vector<Millis> last_end(trace.processes.size(), 0);
  for (std::size_t k = 0; k < trace.segments.size(); ++k) {
    const Segment& s = trace.segments[k];
    const std::string where = "segment " + std::to_string(k) + ": ";
    if (s.end <= s.start) return where + "non-positive length";
    if (k > 0 && s.start != trace.segments[k - 1].end) return where + "not contiguous";
    if (s.is_idle()) continue;
    auto it = index.find(*s.pid);
    if (it == index.end()) return where + "unknown pid '" + *s.pid + "'";
    const std::size_t i = it->second;
    if (s.start < trace.processes[i].arrival) return where + "runs before arrival";
    ran[i] += s.length();
    if (!first[i]) first[i] = s.start;
    last_end[i] = s.end;
  }

  for (std::size_t i = 0; i < trace.processes.size(); ++i) {
    const auto& p = trace.processes[i];
    if (ran[i] != p.burst) {
      return "process '" + p.pid + "' ran " + std::to_string(ran[i]) + " ms of burst " +
             std::to_string(p.burst);
    }
    if (first[i] != p.first_start) return "process '" + p.pid + "' first_start mismatch";
    if (last_end[i] != p.completion) return "process '" + p.pid + "' completion mismatch";
  }
  return std::nullopt;
}

std::string trace_to_json(const Trace& trace) {
  ordered_json segments = ordered_json::array();
  for (const auto& s : trace.segments) segments.push_back(segment_json(s));
  ordered_json processes = ordered_json::array();
  for (const auto& p : trace.processes) {
    processes.push_back({{"pid", p.pid},
                         {"arrival", p.arrival},
                         {"burst", p.burst},
                         {"first_start", p.first_start},
                         {"completion", p.completion}});
  }
  ordered_json cycles = ordered_json::array();
  for (const auto& c : trace.cycles) {
    cycles.push_back({{"start", c.start}, {"quantum", c.quantum}, {"order", c.order}});
  }
  ordered_json doc = {{"workload", trace.workload_name},
              {"policy", policy_spelling(trace.policy)},
              {"segments", std::move(segments)},
              {"processes", std::move(processes)},
              {"cycles", std::move(cycles)}};
  return doc.dump(2) + "\n";
}

Trace trace_from_json(std::string_view text) {
  Trace trace;
  try {
    const json doc = json::parse(text);
    trace.workload_name = doc.at("workload").get<std::string>();
    trace.policy = parse_policy(doc.at("policy").get<std::string>());
    for (const auto& s : doc.at("segments")) {
      Segment seg;
      if (s.contains("pid")) seg.pid = s.at("pid").get<std::string>();
      seg.start = s.at("start").get<Millis>();
      seg.end = s.at("end").get<Millis>();
      trace.segments.push_back(std::move(seg));
    }
    for (const auto& p : doc.at("processes")) {
      trace.processes.push_back({p.at("pid").get<std::string>(), p.at("arrival").get<Millis>(),
                                 p.at("burst").get<Millis>(), p.at("first_start").get<Millis>(),
                                 p.at("completion").get<Millis>()});
    }
    if (doc.contains("cycles")) {
      for (const auto& c : doc.at("cycles")) {
        trace.cycles.push_back({c.at("start").get<Millis>(), c.at("quantum").get<Millis>(),
                                c.at("order").get<std::vector<std::string>>()});
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed trace JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed trace JSON: ") + e.what());
  }
  if (auto problem = check_trace(trace)) throw InputError("invalid trace: " + *problem);
  return trace;
}

}  // namespace smdrr
