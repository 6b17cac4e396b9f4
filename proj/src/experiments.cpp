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

#include "smdrr/experiments.hpp"

#include <array>
#include <future>
#include <sstream>

namespace smdrr {
namespace {

constexpr std::array<PublishedRow, 8> kPublished = {{
    {1, "RR", "20", "144", "85.75", 12},
    {1, "SMDRR", "41,46,3", "124.5", "66", 6},
    {2, "RR", "20", "140.4", "98", 11},
    {2, "SMDRR", "34,20,4,1", "128.6", "86.2", 10},
    {3, "RR", "20", "88.75", "47.75", 9},
    {3, "SMDRR", "10,14,72,3", "73.75", "32.75", 4},
    {4, "RR", "20", "125.6", "82.4", 11},
    {4, "SMDRR", "18,35,25,43", "108.6", "65.4", 7},
}};

std::string quoted(std::string_view v) {
  if (v.find(',') == std::string_view::npos) return std::string(v);
  return "\"" + std::string(v) + "\"";
}

}  // namespace

std::vector<PolicyRun> run_policies(const Workload& workload, std::span<const PolicyConfig> policies,
                                    Convention convention, bool concurrent) {
  auto one = [&workload, convention](const PolicyConfig& p) {
    Trace trace = simulate(workload, p);
    MetricsReport metrics = compute_metrics(trace, convention);
    return PolicyRun{p, std::move(trace), std::move(metrics)};
  };

  std::vector<PolicyRun> runs;
  if (!concurrent) {
    for (const auto& p : policies) runs.push_back(one(p));
    return runs;
  }
  std::vector<std::future<PolicyRun>> pending;
  for (const auto& p : policies) pending.push_back(std::async(std::launch::async, one, p));
  for (auto& f : pending) runs.push_back(f.get());
  return runs;
}

std::span<const PublishedRow> published_rows() { return kPublished; }

CaseResult run_published_case(int id) {
  const std::array<PolicyConfig, 2> policies = {policy::RoundRobin{Quantum(20)}, policy::Smdrr{}};
  return {id, run_policies(paper_case(id), policies, Convention::kPaperZero)};
}

std::vector<Erratum> find_errata(const CaseResult& result) {
  std::vector<Erratum> out;
  for (const auto& run : result.runs) {
    const ComparisonRow row = comparison_row(run);
    for (const auto& pub : kPublished) {
      if (pub.case_id != result.case_id || pub.algorithm != row.algorithm) continue;
      auto check = [&](const char* field, std::string_view printed, const std::string& derived) {
        if (printed != derived) {
          out.push_back({result.case_id, row.algorithm, field, std::string(printed), derived});
        }
      };
      check("TQ", pub.tq, row.tq);
      check("TAT", pub.tat, row.tat);
      check("WT", pub.wt, row.wt);
      check("CS", std::to_string(pub.cs), std::to_string(row.cs));
    }
  }
  return out;
}

std::string errata_report(const std::vector<Erratum>& errata) {
  std::ostringstream out;
  out << "case,algorithm,field,printed,derived\n";
  for (const auto& e : errata) {
    out << e.case_id << ',' << e.algorithm << ',' << e.field << ',' << quoted(e.printed) << ','
        << quoted(e.derived) << '\n';
  }
  return out.str();
}

std::string published_cases_report(ReportFormat format) {
  std::ostringstream out;
  std::vector<Erratum> errata;
  for (int id = 1; id <= 4; ++id) {
    CaseResult result = run_published_case(id);
    out << "# case " << id << '\n' << comparison_report(result.runs, format) << '\n';
    for (auto& e : find_errata(result)) errata.push_back(std::move(e));
  }
  out << "# errata (" << errata.size() << ")\n" << errata_report(errata);
  return out.str();
}

}  // namespace smdrr
