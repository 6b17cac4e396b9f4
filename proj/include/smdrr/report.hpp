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

#ifndef SMDRR_REPORT_HPP_
#define SMDRR_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "smdrr/engine.hpp"
#include "smdrr/metrics.hpp"

namespace smdrr {

enum class ReportFormat { kText, kCsv, kJson };

// "text" / "csv" / "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view text);

// Single-lane ASCII Gantt chart, four lines:
//
//   +------+-------------+
//   | P1   | P2          |
//   +------+-------------+
//   0      20            60
//   scale: 1 column = 1 ms; -- = idle
//
// Scale rule: k = max(1, ceil(span / 60)) ms per column, where span is the
// time from the first segment's start to the makespan. A box is
// ceil(length / k) columns wide, widened when needed so that its label and
// the tick printed under its left edge both fit. Idle boxes read "--".
std::string render_gantt_ascii(const Trace& trace);

// SVG 1.1 Gantt chart: 4 user units per ms on x (x = 4 * start), one 40-unit
// lane. One <rect> per segment with a pid label; idle segments are grey with
// no label. Tick labels sit under every boundary. Output is byte-stable.
std::string render_gantt_svg(const Trace& trace);

inline constexpr int kSvgUnitsPerMs = 4;
inline constexpr int kSvgLaneHeight = 40;

struct PolicyRun {
  PolicyConfig policy;
  Trace trace;
  MetricsReport metrics;
};

// One line of a comparison table. Values are rendered, never recomputed.
struct ComparisonRow {
  std::string algorithm;  // RR, SMDRR, FCFS, SJF
  std::string tq;         // "20", "41,46,3", or "-" without a quantum
  std::string tat;
  std::string wt;
  std::int64_t cs = 0;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

ComparisonRow comparison_row(const PolicyRun& run);

// Columns Algorithm, TQ, TAT, WT, CS, one row per run in input order.
// csv header: algorithm,tq,tat,wt,cs (a tq with commas is double-quoted).
// json: array of {"algorithm", "tq", "tat", "wt", "cs"}.
// Throws std::invalid_argument if the runs are over different workloads.
std::string comparison_report(const std::vector<PolicyRun>& runs, ReportFormat format);

enum class BarMetric { kCs, kAtt, kAwt };

// "cs" / "att" / "awt"; throws std::invalid_argument otherwise.
BarMetric parse_bar_metric(std::string_view text);

struct BarEntry {
  std::string case_label;
  std::string algorithm;
  MetricsReport metrics;
};

// Grouped-bar plot data, header `case,algorithm,value`, one row per entry.
std::string metric_bars(const std::vector<BarEntry>& entries, BarMetric metric);

}  // namespace smdrr

#endif  // SMDRR_REPORT_HPP_
