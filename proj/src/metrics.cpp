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

#include "smdrr/metrics.hpp"

#include <stdexcept>

#include "json.hpp"

namespace smdrr {

Convention parse_convention(std::string_view text) {
  if (text == "standard") return Convention::kStandard;
  if (text == "paper") return Convention::kPaperZero;
  throw std::invalid_argument("unknown convention '" + std::string(text) +
                              "' (expected standard or paper)");
}

std::string convention_name(Convention c) {
  return c == Convention::kStandard ? "standard" : "paper";
}

std::int64_t context_switches(const Trace& trace) {
  std::int64_t dispatches = 0;
  for (const auto& s : trace.segments) {
    if (!s.is_idle()) ++dispatches;
  }
  if (dispatches == 0) throw std::invalid_argument("trace has no process segments");
  return dispatches - 1;
}

MetricsReport compute_metrics(const Trace& trace, Convention convention) {
  MetricsReport report;
  report.convention = convention;
  report.cs = context_switches(trace);
  report.makespan = trace.makespan();

  const auto n = static_cast<std::int64_t>(trace.processes.size());
  Millis total_turnaround = 0, total_waiting = 0, total_response = 0;
  for (const auto& p : trace.processes) {
    ProcessMetrics m;
    m.pid = p.pid;
    m.turnaround = convention == Convention::kStandard ? p.completion - p.arrival : p.completion;
    m.waiting = m.turnaround - p.burst;
    m.response = p.first_start - p.arrival;
    total_turnaround += m.turnaround;
    total_waiting += m.waiting;
    total_response += m.response;
    report.processes.push_back(std::move(m));
  }
  report.att = Rational(total_turnaround, n);
  report.awt = Rational(total_waiting, n);
  report.avg_response = Rational(total_response, n);
  if (report.makespan > 0) {
    report.cpu_utilization = Rational(report.makespan - trace.idle_time(), report.makespan);
    report.throughput = Rational(n, report.makespan);
  }
  return report;
}

std::string metrics_to_json(const MetricsReport& report) {
  using nlohmann::ordered_json;
  ordered_json processes = ordered_json::array();
  for (const auto& p : report.processes) {
    processes.push_back({{"pid", p.pid},
                         {"turnaround", p.turnaround},
                         {"waiting", p.waiting},
                         {"response", p.response}});
  }
  ordered_json doc = {{"convention", convention_name(report.convention)},
                      {"processes", std::move(processes)},
                      {"att", to_decimal(report.att)},
                      {"awt", to_decimal(report.awt)},
                      {"cs", report.cs},
                      {"avg_response", to_decimal(report.avg_response)},
                      {"makespan", report.makespan},
                      {"cpu_utilization", to_decimal(report.cpu_utilization)},
                      {"throughput", to_decimal(report.throughput)}};
  return doc.dump(2) + "\n";
}

}  // namespace smdrr
