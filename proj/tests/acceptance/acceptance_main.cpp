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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smdrr/cli.hpp"
#include "smdrr/engine.hpp"
#include "smdrr/experiments.hpp"
#include "smdrr/metrics.hpp"
#include "smdrr/report.hpp"
#include "support/adversarial.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

namespace {

using namespace smdrr;

// Collects the failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream msg;
      msg << what << ": got " << actual << ", want " << expected;
      failures_.push_back(msg.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string joined(const std::vector<Quantum>& qs) {
  std::string out;
  for (const auto& q : qs) out += (out.empty() ? "" : ",") + std::to_string(q.value());
  return out;
}

struct Expected {
  std::string tq, att, awt;
  std::int64_t cs;
};

// RR:20 then SMDRR rows of one built-in case under the zero-referenced convention.
void check_case(Check& c, int id, const Expected& rr, const Expected& smdrr) {
  const CaseResult result = run_published_case(id);
  const Expected* want[] = {&rr, &smdrr};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& run = result.runs.at(k);
    const std::string label = "case " + std::to_string(id) + " " + policy_label(run.policy);
    c.equal(joined(quantum_sequence(run.trace)), want[k]->tq, label + " TQ");
    c.equal(to_decimal(run.metrics.att), want[k]->att, label + " ATT");
    c.equal(to_decimal(run.metrics.awt), want[k]->awt, label + " AWT");
    c.equal(run.metrics.cs, want[k]->cs, label + " CS");
    c.expect(run.metrics.convention == Convention::kPaperZero, label + " convention");
  }
}

Check criterion_1() {
  Check c;
  check_case(c, 1, {"20", "144", "85.75", 12}, {"41,46,3", "124.25", "66", 6});
  return c;
}

Check criterion_2() {
  Check c;
  check_case(c, 2, {"20", "140.4", "98", 11}, {"34,22,2,1", "129.2", "86.8", 10});
  return c;
}

Check criterion_3() {
  Check c;
  check_case(c, 3, {"20", "88.75", "46.75", 9}, {"10,14,72,3", "73.75", "31.75", 4});
  return c;
}

Check criterion_4() {
  Check c;
  check_case(c, 4, {"20", "125.6", "82.4", 11}, {"18,35,25,43", "108.6", "65.4", 7});
  c.equal(find_errata(run_published_case(4)).size(), 0u, "case 4 errata");
  return c;
}

std::string segments_text(const std::vector<oracle::Seg>& segs) {
  std::string out;
  for (const auto& s : segs) {
    out += (s.pid.empty() ? "--" : s.pid) + "[" + std::to_string(s.start) + "," +
           std::to_string(s.end) + ") ";
  }
  return out;
}

std::vector<oracle::Seg> as_oracle(const Trace& t) {
  std::vector<oracle::Seg> out;
  for (const auto& s : t.segments) out.push_back({s.pid.value_or(""), s.start, s.end});
  return out;
}

Check criterion_5() {
  Check c;
  for (int id = 1; id <= 4; ++id) {
    const Workload w = paper_case(id);
    const auto procs = testgen::to_oracle(w);
    const auto rr = oracle::follow(procs, oracle::Kind::kRoundRobin, 20);
    const auto sm = oracle::follow(procs, oracle::Kind::kSmdrr);
    const std::string label = "case " + std::to_string(id);
    c.equal(segments_text(as_oracle(simulate(w, policy::RoundRobin{Quantum(20)}))),
            segments_text(rr), label + " RR:20 segments");
    c.equal(segments_text(as_oracle(simulate(w, policy::Smdrr{}))), segments_text(sm),
            label + " SMDRR segments");
  }
  return c;
}

constexpr int kWorkloads = 1000;

Check criterion_6() {
  Check c;
  const std::vector<PolicyConfig> policies = {policy::Smdrr{}, policy::RoundRobin{Quantum(20)},
                                              policy::Fcfs{}, policy::Sjf{}};
  std::mt19937_64 rng(0xacce57);
  auto note = [&](const props::Failure& f, const Workload& w, const std::string& name) {
    if (f) c.expect(false, name + " " + *f + " on " + props::describe(w));
  };
  for (int i = 0; i < kWorkloads && c.failures().empty(); ++i) {
    const Workload w = testgen::random_workload(rng, 8, 50);
    for (const auto& p : policies) {
      const Trace t = simulate(w, p);
      const std::string name = policy_spelling(p);
      note(props::conservation(t), w, name + " conservation:");
      note(props::waiting_identity(t), w, name + " waiting identity:");
      note(props::switch_count(t), w, name + " switch count:");
      c.expect(simulate(w, p) == t, name + " determinism on " + props::describe(w));
      if (std::holds_alternative<policy::Smdrr>(p)) {
        note(props::smdrr_cycles(t), w, "smdrr cycles:");
      }
    }
  }

  std::uniform_int_distribution<std::size_t> count(1, 8);
  std::uniform_int_distribution<Millis> burst(1, 100);
  for (int i = 0; i < kWorkloads && c.failures().empty(); ++i) {
    const std::size_t n = count(rng);
    const Millis b = burst(rng);
    std::vector<ProcessSpec> ps;
    for (std::size_t j = 0; j < n; ++j) ps.push_back({"P" + std::to_string(j + 1), 0, b});
    const Trace t = simulate(Workload("equal", ps), policy::Smdrr{});
    c.equal(t.segments.size(), n, "equal bursts: segments");
    c.equal(context_switches(t), static_cast<std::int64_t>(n) - 1, "equal bursts: CS");
  }

  for (int i = 0; i < kWorkloads && c.failures().empty(); ++i) {
    const Workload w = testgen::random_workload(rng, 8, 0);
    Millis max_burst = 0;
    for (const auto& p : w.processes()) max_burst = std::max(max_burst, p.burst);
    const Trace rr = simulate(w, policy::RoundRobin{Quantum(max_burst + i % 3)});
    const Trace fcfs = simulate(w, policy::Fcfs{});
    c.expect(rr.segments == fcfs.segments && rr.processes == fcfs.processes,
             "RR with quantum >= max burst differs from FCFS on " + props::describe(w));
  }
  return c;
}

Check criterion_7() {
  Check c;
  std::ostringstream out, err;
  c.equal(cli::run_cli({"paper-cases"}, out, err), cli::kExitOk, "exit status");
  const std::string text = out.str();
  for (int id = 1; id <= 4; ++id) {
    c.expect(text.find("# case " + std::to_string(id) + "\nalgorithm,tq,tat,wt,cs\n") !=
                 std::string::npos,
             "table for case " + std::to_string(id));
  }
  c.expect(text.find("RR,20,144,85.75,12\n") != std::string::npos, "case 1 RR row");

  const std::string expected_errata =
      "case,algorithm,field,printed,derived\n"
      "1,SMDRR,TAT,124.5,124.25\n"
      "2,SMDRR,TQ,\"34,20,4,1\",\"34,22,2,1\"\n"
      "2,SMDRR,TAT,128.6,129.2\n"
      "2,SMDRR,WT,86.2,86.8\n"
      "3,RR,WT,47.75,46.75\n"
      "3,SMDRR,WT,32.75,31.75\n";
  const std::string marker = "# errata (6)\n";
  const auto at = text.find(marker);
  c.expect(at != std::string::npos, "errata heading");
  if (at != std::string::npos) {
    c.equal(text.substr(at + marker.size()), expected_errata, "errata ledger");
  }
  return c;
}

Check criterion_8() {
  Check c;
  const Rational exact = Rational(3) / (Rational(1, 6) + Rational(1, 12) + Rational(1, 18));
  c.expect(exact == Rational(108, 11), "3 / (1/6 + 1/12 + 1/18) == 108/11");
  c.equal(harmonic_mean_quantum(std::vector<Millis>{6, 12, 18}).value(), exact.ceil(),
          "quantum for [6,12,18]");
  int naive_misses = 0;
  for (const auto& b : adversarial::boundary_set()) {
    std::vector<long> xs(b.xs.begin(), b.xs.end());
    c.equal(oracle::harmonic_ceiling(xs), b.exact_ceiling, "oracle on boundary input");
    c.equal(harmonic_mean_quantum(b.xs).value(), b.exact_ceiling, "quantum on boundary input");
    naive_misses += adversarial::naive_double(b.xs) != b.exact_ceiling;
  }
  // The set must be able to expose a floating-point implementation.
  c.expect(naive_misses >= 10, "boundary set trips double arithmetic");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"case 1 RR:20 and SMDRR metrics", criterion_1},
      {"case 2 RR:20 and SMDRR metrics", criterion_2},
      {"case 3 RR:20 and SMDRR metrics", criterion_3},
      {"case 4 metrics with zero errata", criterion_4},
      {"engine traces equal the tick oracle for all 8 runs", criterion_5},
      {"property suite over 1000 seeded workloads", criterion_6},
      {"paper-cases tables and errata ledger", criterion_7},
      {"exact harmonic-mean quantum on the boundary set", criterion_8},
  };
  const auto begin = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = result.failures().empty();
    failed += !ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << "\n";
    for (const auto& f : result.failures()) std::cout << "       " << f << "\n";
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - begin)
                      .count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in " << ms
            << " ms\n";
  return failed == 0 ? 0 : 1;
}
