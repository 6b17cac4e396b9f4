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

#include "smdrr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "smdrr/experiments.hpp"

namespace smdrr::cli {
namespace {

// Bad flags or flag combinations: exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceFlags {
  std::string workload_path;
  int case_id = 0;
  std::size_t n = 0;
  std::string burst;
  std::string arrival = "0..0";
  std::uint64_t seed = 0;
};

struct OutputFlags {
  std::vector<std::string> policies;
  std::string convention = "standard";
  std::string format = "text";
  std::string gantt;
  std::string out_path;
};

void add_generator_flags(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--n", f.n, "Number of generated processes");
  cmd->add_option("--burst", f.burst, "Burst range a..b in ms");
  cmd->add_option("--arrival", f.arrival, "Arrival range a..b in ms")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Generator seed")->capture_default_str();
}

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--workload", f.workload_path, "Workload file (.csv or .json)");
  cmd->add_option("--case", f.case_id, "Built-in case 1-4")->check(CLI::Range(1, 4));
  add_generator_flags(cmd, f);
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--policy", o.policies, "smdrr | rr:<q> | fcfs | sjf (repeatable)")->required();
  cmd->add_option("--convention", o.convention, "standard | paper")
      ->check(CLI::IsMember({"standard", "paper"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write output here instead of stdout");
}

GeneratorSpec generator_spec(const SourceFlags& f) {
  if (f.n == 0) throw UsageError("--n is required to generate a workload");
  if (f.burst.empty()) throw UsageError("--burst a..b is required to generate a workload");
  GeneratorSpec spec;
  try {
    spec.count = f.n;
    std::tie(spec.burst_min, spec.burst_max) = parse_range(f.burst);
    std::tie(spec.arrival_min, spec.arrival_max) = parse_range(f.arrival);
    spec.seed = f.seed;
    validate(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open workload file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Workload load_workload(const SourceFlags& f, const CLI::App& cmd) {
  const bool from_file = cmd.count("--workload") > 0;
  const bool from_case = cmd.count("--case") > 0;
  const bool from_generator = cmd.count("--n") > 0 || cmd.count("--burst") > 0;
  if (from_file + from_case + from_generator != 1) {
    throw UsageError("give exactly one workload source: --workload, --case, or --n/--burst");
  }
  if (from_case) return paper_case(f.case_id);
  if (from_generator) return generate_workload(generator_spec(f));

  const std::filesystem::path path(f.workload_path);
  const auto format = path.extension() == ".json" ? WorkloadFormat::kJson : WorkloadFormat::kCsv;
  try {
    return parse_workload(read_file(f.workload_path), format, path.stem().string());
  } catch (const InputError& e) {
    throw InputError(f.workload_path + ": " + e.what());
  }
}

std::vector<PolicyConfig> parse_policies(const std::vector<std::string>& specs) {
  std::vector<PolicyConfig> out;
  for (const auto& s : specs) {
    try {
      out.push_back(parse_policy(s));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + out_path + "'");
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    widths.resize(std::max(widths.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(widths[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string run_text(const std::vector<PolicyRun>& runs) {
  std::string out;
  for (const auto& run : runs) {
    const auto& m = run.metrics;
    out += run.trace.workload_name + " / " + policy_spelling(run.policy) +
           " (convention: " + convention_name(m.convention) + ")\n";
    std::vector<std::vector<std::string>> rows = {{"pid", "arrival", "burst", "first_start",
                                                   "completion", "turnaround", "waiting",
                                                   "response"}};
    for (std::size_t i = 0; i < m.processes.size(); ++i) {
      const auto& p = run.trace.processes[i];
      const auto& pm = m.processes[i];
      rows.push_back({p.pid, std::to_string(p.arrival), std::to_string(p.burst),
                      std::to_string(p.first_start), std::to_string(p.completion),
                      std::to_string(pm.turnaround), std::to_string(pm.waiting),
                      std::to_string(pm.response)});
    }
    out += aligned(rows);
    const auto row = comparison_row(run);
    out += "TQ " + row.tq + "  ATT " + row.tat + "  AWT " + row.wt + "  CS " +
           std::to_string(m.cs) + "  avg response " + to_decimal(m.avg_response) + "  makespan " +
           std::to_string(m.makespan) + "  utilization " + to_decimal(m.cpu_utilization) +
           "  throughput " + to_decimal(m.throughput) + "\n\n";
  }
  return out;
}

std::string run_csv(const std::vector<PolicyRun>& runs) {
  std::string out =
      "policy,pid,arrival,burst,first_start,completion,turnaround,waiting,response\n";
  for (const auto& run : runs) {
    for (std::size_t i = 0; i < run.trace.processes.size(); ++i) {
      const auto& p = run.trace.processes[i];
      const auto& pm = run.metrics.processes[i];
      out += policy_spelling(run.policy) + "," + p.pid + "," + std::to_string(p.arrival) + "," +
             std::to_string(p.burst) + "," + std::to_string(p.first_start) + "," +
             std::to_string(p.completion) + "," + std::to_string(pm.turnaround) + "," +
             std::to_string(pm.waiting) + "," + std::to_string(pm.response) + "\n";
    }
  }
  return out;
}

std::string run_json(const Workload& w, const std::vector<PolicyRun>& runs) {
  using nlohmann::ordered_json;
  ordered_json list = ordered_json::array();
  for (const auto& run : runs) {
    list.push_back({{"policy", policy_spelling(run.policy)},
                    {"trace", ordered_json::parse(trace_to_json(run.trace))},
                    {"metrics", ordered_json::parse(metrics_to_json(run.metrics))}});
  }
  ordered_json doc = {{"workload", w.name()}, {"runs", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::string gantt_output(const std::vector<PolicyRun>& runs, const std::string& kind) {
  if (kind == "svg") {
    if (runs.size() != 1) throw UsageError("--gantt svg renders exactly one policy");
    return render_gantt_svg(runs.front().trace);
  }
  std::string out;
  for (const auto& run : runs) {
    out += run.trace.workload_name + " / " + policy_spelling(run.policy) + "\n" +
           render_gantt_ascii(run.trace) + "\n";
  }
  return out;
}

int cmd_run(const CLI::App& cmd, const SourceFlags& src, const OutputFlags& o, std::ostream& out) {
  const auto policies = parse_policies(o.policies);
  const Workload w = load_workload(src, cmd);
  const auto runs = run_policies(w, policies, parse_convention(o.convention));

  std::string text;
  if (!o.gantt.empty()) {
    text = gantt_output(runs, o.gantt);
  } else if (o.format == "json") {
    text = run_json(w, runs);
  } else if (o.format == "csv") {
    text = run_csv(runs);
  } else {
    text = run_text(runs);
  }
  emit(text, o.out_path, out);
  return kExitOk;
}

int cmd_compare(const CLI::App& cmd, const SourceFlags& src, const OutputFlags& o,
                std::ostream& out) {
  const auto policies = parse_policies(o.policies);
  if (policies.size() < 2) throw UsageError("compare needs at least two --policy flags");
  const Workload w = load_workload(src, cmd);
  const auto runs = run_policies(w, policies, parse_convention(o.convention));
  emit(comparison_report(runs, parse_report_format(o.format)), o.out_path, out);
  return kExitOk;
}

int cmd_generate(const SourceFlags& src, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  const Workload w = generate_workload(generator_spec(src));
  emit(serialize_workload(w, parse_workload_format(format)), out_path, out);
  return kExitOk;
}

int cmd_paper_cases(const std::string& format, const std::string& bars, const std::string& out_path,
                    std::ostream& out) {
  if (bars.empty()) {
    emit(published_cases_report(parse_report_format(format)), out_path, out);
    return kExitOk;
  }
  std::vector<BarEntry> entries;
  for (int id = 1; id <= 4; ++id) {
    for (auto& run : run_published_case(id).runs) {
      entries.push_back({"case-" + std::to_string(id), policy_label(run.policy),
                         std::move(run.metrics)});
    }
  }
  emit(metric_bars(entries, parse_bar_metric(bars)), out_path, out);
  return kExitOk;
}

}  // namespace

std::pair<Millis, Millis> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  auto number = [text](std::string_view part) {
    Millis v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("expected a range a..b, got '" + std::string(text) + "'");
    }
    return v;
  };
  if (dots == std::string_view::npos) {
    throw std::invalid_argument("expected a range a..b, got '" + std::string(text) + "'");
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CPU scheduling simulator: SMDRR, round robin, FCFS and SJF", "smdrr"};
  app.require_subcommand(1);

  SourceFlags run_src, cmp_src, gen_src;
  OutputFlags run_out, cmp_out;

  CLI::App* run = app.add_subcommand("run", "Simulate one or more policies on a workload");
  add_source_flags(run, run_src);
  add_output_flags(run, run_out);
  run->add_option("--gantt", run_out.gantt, "Emit a Gantt chart instead: ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  CLI::App* compare = app.add_subcommand("compare", "Comparison table across policies");
  add_source_flags(compare, cmp_src);
  add_output_flags(compare, cmp_out);

  std::string gen_format = "csv", gen_path;
  CLI::App* generate = app.add_subcommand("generate", "Write a seeded random workload");
  add_generator_flags(generate, gen_src);
  generate->add_option("--format", gen_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  generate->add_option("--out", gen_path, "Write output here instead of stdout");

  std::string pc_format = "csv", pc_bars, pc_path;
  CLI::App* paper = app.add_subcommand(
      "paper-cases", "Run built-in cases 1-4 under RR:20 and SMDRR and list errata");
  paper->add_option("--format", pc_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  paper->add_option("--bars", pc_bars, "Emit bar-chart data for one metric: cs | att | awt")
      ->check(CLI::IsMember({"cs", "att", "awt"}));
  paper->add_option("--out", pc_path, "Write output here instead of stdout");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'smdrr --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(*run, run_src, run_out, out);
    if (compare->parsed()) return cmd_compare(*compare, cmp_src, cmp_out, out);
    if (generate->parsed()) {
      if (generate->count("--n") == 0 || generate->count("--burst") == 0) {
        throw UsageError("generate requires --n and --burst");
      }
      return cmd_generate(gen_src, gen_format, gen_path, out);
    }
    return cmd_paper_cases(pc_format, pc_bars, pc_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << "run 'smdrr --help' for usage\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace smdrr::cli
