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

#include "smdrr/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace smdrr {
namespace {

constexpr Millis kTargetColumns = 60;

std::string box_label(const Segment& s) { return s.pid ? *s.pid : "--"; }

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Fill colours cycle by submission index so a process keeps its colour
// across charts of the same workload.
constexpr std::array<const char*, 8> kPalette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                                 "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};
constexpr const char* kIdleFill = "#d9d9d9";

bool same_workload(const Trace& a, const Trace& b) {
  if (a.workload_name != b.workload_name || a.processes.size() != b.processes.size()) return false;
  for (std::size_t i = 0; i < a.processes.size(); ++i) {
    const auto& x = a.processes[i];
    const auto& y = b.processes[i];
    if (x.pid != y.pid || x.arrival != y.arrival || x.burst != y.burst) return false;
  }
  return true;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::kText;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(text) +
                              "' (expected text, csv or json)");
}

std::string render_gantt_ascii(const Trace& trace) {
  if (trace.segments.empty()) return "(empty trace)\n";
  const Millis origin = trace.segments.front().start;
  const Millis span = trace.makespan() - origin;
  const Millis scale = std::max<Millis>(1, ceil_div(span, kTargetColumns));

  std::size_t min_inner = std::to_string(trace.makespan()).size();
  for (const auto& s : trace.segments) min_inner = std::max(min_inner, box_label(s).size() + 1);

  std::string border = "+";
  std::string labels = "|";
  std::string ticks;
  for (const auto& s : trace.segments) {
    const auto inner = std::max<std::size_t>(static_cast<std::size_t>(ceil_div(s.length(), scale)),
                                             min_inner);
    std::string tick = std::to_string(s.start);
    ticks += tick + std::string(inner + 1 - tick.size(), ' ');
    border += std::string(inner, '-') + "+";
    std::string label = " " + box_label(s);
    labels += label + std::string(inner - label.size(), ' ') + "|";
  }
  ticks += std::to_string(trace.makespan());

  std::ostringstream out;
  out << border << '\n'
      << labels << '\n'
      << border << '\n'
      << ticks << '\n'
      << "scale: 1 column = " << scale << " ms; -- = idle\n";
  return out.str();
}

std::string render_gantt_svg(const Trace& trace) {
  const Millis width = trace.makespan() * kSvgUnitsPerMs;
  const int height = kSvgLaneHeight + 24;

  std::vector<std::string> order;
  for (const auto& p : trace.processes) order.push_back(p.pid);
  auto colour = [&order](const std::string& pid) {
    const auto it = std::ranges::find(order, pid);
    return kPalette[static_cast<std::size_t>(it - order.begin()) % kPalette.size()];
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <title>" << xml_escape(trace.workload_name) << " / "
      << xml_escape(policy_spelling(trace.policy)) << "</title>\n";
  for (const auto& s : trace.segments) {
    const Millis x = s.start * kSvgUnitsPerMs;
    const Millis w = s.length() * kSvgUnitsPerMs;
    out << "  <rect x=\"" << x << "\" y=\"0\" width=\"" << w << "\" height=\"" << kSvgLaneHeight
        << "\" fill=\"" << (s.pid ? colour(*s.pid) : kIdleFill) << "\" stroke=\"#000000\"/>\n";
    if (s.pid) {
      out << "  <text x=\"" << x + w / 2 << "\" y=\"" << kSvgLaneHeight / 2 + 5
          << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
          << xml_escape(*s.pid) << "</text>\n";
    }
  }
  auto tick = [&out](Millis t) {
    out << "  <text x=\"" << t * kSvgUnitsPerMs << "\" y=\"" << kSvgLaneHeight + 16
        << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << t
        << "</text>\n";
  };
  for (const auto& s : trace.segments) tick(s.start);
  if (!trace.segments.empty()) tick(trace.makespan());
  out << "</svg>\n";
  return out.str();
}

ComparisonRow comparison_row(const PolicyRun& run) {
  ComparisonRow row;
  row.algorithm = policy_label(run.policy);
  if (has_quantum(run.policy)) {
    for (const Quantum& q : quantum_sequence(run.trace)) {
      if (!row.tq.empty()) row.tq += ",";
      row.tq += std::to_string(q.value());
    }
  } else {
    row.tq = "-";
  }
  row.tat = to_decimal(run.metrics.att);
  row.wt = to_decimal(run.metrics.awt);
  row.cs = run.metrics.cs;
  return row;
}

std::string comparison_report(const std::vector<PolicyRun>& runs, ReportFormat format) {
  for (const auto& run : runs) {
    if (!same_workload(run.trace, runs.front().trace)) {
      throw std::invalid_argument("comparison rows must share one workload");
    }
  }
  std::vector<ComparisonRow> rows;
  for (const auto& run : runs) rows.push_back(comparison_row(run));

  std::ostringstream out;
  switch (format) {
    case ReportFormat::kCsv:
      out << "algorithm,tq,tat,wt,cs\n";
      for (const auto& r : rows) {
        out << csv_field(r.algorithm) << ',' << csv_field(r.tq) << ',' << r.tat << ',' << r.wt
            << ',' << r.cs << '\n';
      }
      break;
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        doc.push_back(
            {{"algorithm", r.algorithm}, {"tq", r.tq}, {"tat", r.tat}, {"wt", r.wt}, {"cs", r.cs}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::kText: {
      std::array<std::size_t, 4> w = {9, 2, 3, 2};
      for (const auto& r : rows) {
        w[0] = std::max(w[0], r.algorithm.size());
        w[1] = std::max(w[1], r.tq.size());
        w[2] = std::max(w[2], r.tat.size());
        w[3] = std::max(w[3], r.wt.size());
      }
      auto line = [&](const std::string& a, const std::string& b, const std::string& c,
                      const std::string& d, const std::string& e) {
        out << a << std::string(w[0] - a.size() + 2, ' ') << b
            << std::string(w[1] - b.size() + 2, ' ') << c << std::string(w[2] - c.size() + 2, ' ')
            << d << std::string(w[3] - d.size() + 2, ' ') << e << '\n';
      };
      line("Algorithm", "TQ", "TAT", "WT", "CS");
      for (const auto& r : rows) line(r.algorithm, r.tq, r.tat, r.wt, std::to_string(r.cs));
      break;
    }
  }
  return out.str();
}

BarMetric parse_bar_metric(std::string_view text) {
  if (text == "cs") return BarMetric::kCs;
  if (text == "att") return BarMetric::kAtt;
  if (text == "awt") return BarMetric::kAwt;
  throw std::invalid_argument("unknown metric '" + std::string(text) + "' (expected cs, att or awt)");
}

std::string metric_bars(const std::vector<BarEntry>& entries, BarMetric metric) {
  std::ostringstream out;
  out << "case,algorithm,value\n";
  for (const auto& e : entries) {
    out << csv_field(e.case_label) << ',' << csv_field(e.algorithm) << ',';
    switch (metric) {
      case BarMetric::kCs: out << e.metrics.cs; break;
      case BarMetric::kAtt: out << to_decimal(e.metrics.att); break;
      case BarMetric::kAwt: out << to_decimal(e.metrics.awt); break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace smdrr
