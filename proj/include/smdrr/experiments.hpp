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

#ifndef SMDRR_EXPERIMENTS_HPP_
#define SMDRR_EXPERIMENTS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smdrr/report.hpp"

namespace smdrr {

// Simulates every policy over the same workload and computes its metrics.
// With `concurrent` set each policy runs on its own thread; results are
// always returned in `policies` order, identical to a sequential run.
std::vector<PolicyRun> run_policies(const Workload& workload, std::span<const PolicyConfig> policies,
                                    Convention convention, bool concurrent = true);

// A comparison row as originally published for a built-in case.
struct PublishedRow {
  int case_id;
  std::string_view algorithm;
  std::string_view tq;
  std::string_view tat;
  std::string_view wt;
  std::int64_t cs;
};

// Published RR:20 and SMDRR rows for built-in cases 1-4.
std::span<const PublishedRow> published_rows();

// A published value that disagrees with the value the simulator derives
// from the harmonic-mean rule and the workload.
struct Erratum {
  int case_id;
  std::string algorithm;
  std::string field;  // TQ, TAT, WT or CS
  std::string printed;
  std::string derived;

  friend bool operator==(const Erratum&, const Erratum&) = default;
};

struct CaseResult {
  int case_id;
  std::vector<PolicyRun> runs;  // RR:20 then SMDRR
};

// Runs built-in case `id` under RR:20 and SMDRR with the zero-referenced
// convention the published tables use.
CaseResult run_published_case(int id);

// One erratum per differing field, in TQ, TAT, WT, CS order.
std::vector<Erratum> find_errata(const CaseResult& result);

// CSV with header `case,algorithm,field,printed,derived`.
std::string errata_report(const std::vector<Erratum>& errata);

// Complete output of the paper-cases command: one titled comparison table
// per case in `format`, then the errata ledger.
std::string published_cases_report(ReportFormat format);

}  // namespace smdrr

#endif  // SMDRR_EXPERIMENTS_HPP_
