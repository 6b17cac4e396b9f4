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

#include "smdrr/workload.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace smdrr {
namespace {

using nlohmann::json;

std::string located(const std::string& message, std::optional<std::size_t> row,
                    const std::string& field) {
  std::string out;
  if (row) out += "row " + std::to_string(*row) + ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + message;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Millis parse_millis(std::string_view text, std::size_t row, const char* field) {
  text = trim(text);
  if (text.empty()) throw InputError("missing value", row, field);
  Millis value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw InputError("value out of range", row, field);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("expected an integer number of milliseconds, got '" + std::string(text) + "'",
                     row, field);
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

Workload parse_csv(std::string_view text, std::string_view name) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw InputError("empty workload file");
  if (trim(lines[i]) != "pid,arrival,burst") {
    throw InputError("expected header 'pid,arrival,burst'", i + 1);
  }

  std::vector<ProcessSpec> processes;
  std::unordered_set<std::string> seen;
  for (++i; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    auto line = trim(lines[i]);
    if (line.empty()) continue;

    std::vector<std::string_view> cols;
    std::size_t start = 0;
    for (;;) {
      auto comma = line.find(',', start);
      cols.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols.size() != 3) {
      throw InputError("expected 3 columns, found " + std::to_string(cols.size()), row);
    }

    ProcessSpec p;
    p.pid = std::string(trim(cols[0]));
    if (p.pid.empty()) throw InputError("empty pid", row, "pid");
    p.arrival = parse_millis(cols[1], row, "arrival");
    p.burst = parse_millis(cols[2], row, "burst");
    if (p.arrival < 0) throw InputError("negative arrival", row, "arrival");
    if (p.burst < 1) throw InputError("burst < 1", row, "burst");
    if (!seen.insert(p.pid).second) throw InputError("duplicate pid '" + p.pid + "'", row, "pid");
    processes.push_back(std::move(p));
  }
  if (processes.empty()) throw InputError("workload has no processes");
  return Workload(std::string(name), std::move(processes));
}

Millis json_millis(const json& obj, const char* key, std::size_t row) {
  if (!obj.contains(key)) throw InputError("missing field", row, key);
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw InputError("expected an integer number of milliseconds", row, key);
  }
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(INT64_MAX)) {
    throw InputError("value out of range", row, key);
  }
  return v.get<Millis>();
}

Workload parse_json(std::string_view text) {
  if (trim(text).empty()) throw InputError("empty workload file");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("expected a JSON object");
  std::string name = "workload";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("expected a string", std::nullopt, "name");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("processes") || !doc["processes"].is_array()) {
    throw InputError("expected an array", std::nullopt, "processes");
  }

  std::vector<ProcessSpec> processes;
  std::size_t row = 0;
  for (const json& item : doc["processes"]) {
    ++row;
    if (!item.is_object()) throw InputError("expected a process object", row);
    if (!item.contains("pid") || !item["pid"].is_string()) {
      throw InputError("expected a string", row, "pid");
    }
    processes.push_back({item["pid"].get<std::string>(), json_millis(item, "arrival", row),
                         json_millis(item, "burst", row)});
  }
  return Workload(std::move(name), std::move(processes));
}

}  // namespace

InputError::InputError(const std::string& message, std::optional<std::size_t> row,
                       std::string field)
    : std::runtime_error(located(message, row, field)), row_(row), field_(std::move(field)) {}

Workload::Workload(std::string name, std::vector<ProcessSpec> processes)
    : name_(std::move(name)), processes_(std::move(processes)) {
  if (processes_.empty()) throw InputError("workload has no processes");
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < processes_.size(); ++i) {
    const auto& p = processes_[i];
    if (p.pid.empty()) throw InputError("empty pid", i + 1, "pid");
    if (p.pid.find_first_of(",\n\r") != std::string::npos) {
      throw InputError("pid may not contain commas or line breaks", i + 1, "pid");
    }
    if (trim(p.pid).size() != p.pid.size()) {
      throw InputError("pid may not start or end with whitespace", i + 1, "pid");
    }
    if (p.arrival < 0) throw InputError("negative arrival", i + 1, "arrival");
    if (p.burst < 1) throw InputError("burst < 1", i + 1, "burst");
    if (!seen.insert(p.pid).second) throw InputError("duplicate pid '" + p.pid + "'", i + 1, "pid");
  }
}

std::size_t Workload::index_of(std::string_view pid) const {
  for (std::size_t i = 0; i < processes_.size(); ++i) {
    if (processes_[i].pid == pid) return i;
  }
  throw std::out_of_range("unknown pid '" + std::string(pid) + "'");
}

WorkloadFormat parse_workload_format(std::string_view name) {
  if (name == "csv") return WorkloadFormat::kCsv;
  if (name == "json") return WorkloadFormat::kJson;
  throw InputError("unknown workload format '" + std::string(name) + "'");
}

Workload parse_workload(std::string_view text, WorkloadFormat format, std::string_view csv_name) {
  return format == WorkloadFormat::kCsv ? parse_csv(text, csv_name) : parse_json(text);
}

std::string serialize_workload(const Workload& w, WorkloadFormat format) {
  if (format == WorkloadFormat::kCsv) {
    std::ostringstream out;
    out << "pid,arrival,burst\n";
    for (const auto& p : w.processes()) out << p.pid << ',' << p.arrival << ',' << p.burst << '\n';
    return out.str();
  }
  nlohmann::ordered_json processes = nlohmann::ordered_json::array();
  for (const auto& p : w.processes()) {
    processes.push_back({{"pid", p.pid}, {"arrival", p.arrival}, {"burst", p.burst}});
  }
  nlohmann::ordered_json doc = {{"name", w.name()}, {"processes", std::move(processes)}};
  return doc.dump(2) + "\n";
}

void validate(const GeneratorSpec& spec) {
  if (spec.count < 1) throw InputError("process count must be at least 1", std::nullopt, "n");
  if (spec.burst_min < 1) throw InputError("burst minimum must be at least 1", std::nullopt, "burst");
  if (spec.burst_min > spec.burst_max) throw InputError("empty burst range", std::nullopt, "burst");
  if (spec.arrival_min < 0) {
    throw InputError("arrival minimum must be non-negative", std::nullopt, "arrival");
  }
  if (spec.arrival_min > spec.arrival_max) {
    throw InputError("empty arrival range", std::nullopt, "arrival");
  }
}

Workload generate_workload(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 engine(spec.seed);
  auto draw = [&engine](Millis lo, Millis hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Millis>(uniform_below(engine, span));
  };

  std::vector<ProcessSpec> processes(spec.count);
  for (auto& p : processes) {
    p.arrival = draw(spec.arrival_min, spec.arrival_max);
    p.burst = draw(spec.burst_min, spec.burst_max);
  }
  std::stable_sort(processes.begin(), processes.end(),
                   [](const ProcessSpec& a, const ProcessSpec& b) { return a.arrival < b.arrival; });
  for (std::size_t i = 0; i < processes.size(); ++i) processes[i].pid = "P" + std::to_string(i + 1);
  return Workload("generated-" + std::to_string(spec.seed), std::move(processes));
}

Workload paper_case(int id) {
  auto make = [id](std::vector<Millis> arrivals, std::vector<Millis> bursts) {
    std::vector<ProcessSpec> ps;
    for (std::size_t i = 0; i < bursts.size(); ++i) {
      ps.push_back({"P" + std::to_string(i + 1), arrivals[i], bursts[i]});
    }
    return Workload("case-" + std::to_string(id), std::move(ps));
  };
  switch (id) {
    case 1:
      return make({0, 0, 0, 0}, {20, 40, 83, 90});
    case 2:
      return make({0, 0, 0, 0, 0}, {17, 27, 52, 57, 59});
    case 3:
      return make({0, 6, 12, 22}, {10, 14, 69, 75});
    case 4:
      return make({0, 3, 6, 11, 21}, {18, 20, 50, 60, 68});
    default:
      throw InputError("unknown built-in case " + std::to_string(id) + " (expected 1-4)");
  }
}

}  // namespace smdrr
