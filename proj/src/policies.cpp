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

#include "smdrr/policies.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace smdrr {

namespace mp = boost::multiprecision;

Quantum::Quantum(Millis value) : value_(value) {
  if (value < 1) throw std::invalid_argument("quantum must be at least 1 ms");
}

PolicyConfig parse_policy(std::string_view text) {
  if (text == "smdrr") return policy::Smdrr{};
  if (text == "fcfs") return policy::Fcfs{};
  if (text == "sjf") return policy::Sjf{};
  if (text.starts_with("rr:")) {
    auto digits = text.substr(3);
    Millis q = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && q >= 1) {
      return policy::RoundRobin{Quantum(q)};
    }
    throw std::invalid_argument("rr quantum must be a positive integer, got '" +
                                std::string(digits) + "'");
  }
  if (text == "rr") throw std::invalid_argument("rr requires a quantum, e.g. rr:20");
  throw std::invalid_argument("unknown policy '" + std::string(text) +
                              "' (expected smdrr, rr:<q>, fcfs or sjf)");
}

std::string policy_spelling(const PolicyConfig& p) {
  struct {
    std::string operator()(const policy::Smdrr&) const { return "smdrr"; }
    std::string operator()(const policy::RoundRobin& rr) const {
      return "rr:" + std::to_string(rr.quantum.value());
    }
    std::string operator()(const policy::Fcfs&) const { return "fcfs"; }
    std::string operator()(const policy::Sjf&) const { return "sjf"; }
  } visitor;
  return std::visit(visitor, p);
}

std::string policy_label(const PolicyConfig& p) {
  struct {
    std::string operator()(const policy::Smdrr&) const { return "SMDRR"; }
    std::string operator()(const policy::RoundRobin&) const { return "RR"; }
    std::string operator()(const policy::Fcfs&) const { return "FCFS"; }
    std::string operator()(const policy::Sjf&) const { return "SJF"; }
  } visitor;
  return std::visit(visitor, p);
}

bool has_quantum(const PolicyConfig& p) {
  return std::holds_alternative<policy::Smdrr>(p) || std::holds_alternative<policy::RoundRobin>(p);
}

Quantum harmonic_mean_quantum(std::span<const Millis> remaining) {
  if (remaining.empty()) throw std::invalid_argument("harmonic mean of an empty set");
  mp::cpp_rational reciprocal_sum = 0;
  for (Millis x : remaining) {
    if (x < 1) throw std::invalid_argument("harmonic mean needs positive values");
    reciprocal_sum += mp::cpp_rational(1, x);
  }
  const mp::cpp_rational mean = mp::cpp_rational(static_cast<long long>(remaining.size())) /
                                reciprocal_sum;

  mp::cpp_int q, r;
  mp::divide_qr(mp::numerator(mean), mp::denominator(mean), q, r);
  if (r != 0) ++q;  // mean is positive, so truncation is floor
  return Quantum(q.convert_to<Millis>());
}

CyclePlan plan_cycle_smdrr(std::span<const ReadyEntry> ready) {
  if (ready.empty()) throw std::invalid_argument("cannot plan a cycle over an empty ready set");
  std::vector<const ReadyEntry*> sorted;
  sorted.reserve(ready.size());
  for (const auto& e : ready) sorted.push_back(&e);
  std::ranges::sort(sorted, [](const ReadyEntry* a, const ReadyEntry* b) {
    return std::tie(a->remaining, a->arrival, a->submission_index) <
           std::tie(b->remaining, b->arrival, b->submission_index);
  });

  std::vector<std::string> order;
  std::vector<Millis> remaining;
  for (const ReadyEntry* e : sorted) {
    order.push_back(e->pid);
    remaining.push_back(e->remaining);
  }
  return CyclePlan{std::move(order), harmonic_mean_quantum(remaining)};
}

std::deque<ReadyEntry> rr_requeue_position(std::deque<ReadyEntry> queue, ReadyEntry preempted,
                                           std::vector<ReadyEntry> arrivals_during_run) {
  if (preempted.remaining < 1) {
    throw std::invalid_argument("a completed process cannot be requeued");
  }
  std::ranges::stable_sort(arrivals_during_run, [](const ReadyEntry& a, const ReadyEntry& b) {
    return std::tie(a.arrival, a.submission_index) < std::tie(b.arrival, b.submission_index);
  });
  for (auto& e : arrivals_during_run) queue.push_back(std::move(e));
  queue.push_back(std::move(preempted));
  return queue;
}

}  // namespace smdrr
