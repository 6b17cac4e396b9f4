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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "smdrr/engine.hpp"
#include "support/golden.hpp"

namespace smdrr::cli {
namespace {

using ::testing::HasSubstr;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("smdrr_cli_test_" + name);
}

TEST(CliRunTest, PaperConventionJsonMetrics) {
  Result r = invoke({"run", "--case", "1", "--policy", "smdrr", "--convention", "paper",
                     "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& metrics = doc["runs"][0]["metrics"];
  EXPECT_EQ(metrics["att"], "124.25");
  EXPECT_EQ(metrics["awt"], "66");
  EXPECT_EQ(metrics["cs"], 6);
  EXPECT_EQ(metrics["convention"], "paper");
  // The embedded trace is the documented trace document.
  EXPECT_EQ(trace_from_json(doc["runs"][0]["trace"].dump()), simulate(paper_case(1), policy::Smdrr{}));
}

TEST(CliRunTest, MissingWorkloadFileIsDataError) {
  Result r = invoke({"run", "--workload", "missing.csv", "--policy", "smdrr"});
  EXPECT_EQ(r.status, kExitData);
  EXPECT_THAT(r.err, HasSubstr("missing.csv"));
}

TEST(CliRunTest, RrWithoutQuantumIsUsageError) {
  Result r = invoke({"run", "--case", "1", "--policy", "rr"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("rr:20"));
}

TEST(CliRunTest, BadFlagsAreUsageErrors) {
  EXPECT_EQ(invoke({"run", "--case", "1"}).status, kExitUsage);
  EXPECT_EQ(invoke({"run", "--case", "5", "--policy", "smdrr"}).status, kExitUsage);
  EXPECT_EQ(invoke({"run", "--policy", "smdrr"}).status, kExitUsage);
  EXPECT_EQ(invoke({"run", "--case", "1", "--workload", "x.csv", "--policy", "smdrr"}).status,
            kExitUsage);
  EXPECT_EQ(invoke({"run", "--case", "1", "--policy", "smdrr", "--format", "xml"}).status,
            kExitUsage);
  EXPECT_EQ(invoke({"run", "--case", "1", "--policy", "smdrr", "--convention", "x"}).status,
            kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(invoke({}).status, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).status, kExitOk);
}

TEST(CliRunTest, WorkloadFilesInBothFormats) {
  const auto csv = temp_path("w.csv");
  std::ofstream(csv) << "pid,arrival,burst\nA,0,3\nB,1,0\n";
  Result bad = invoke({"run", "--workload", csv.string(), "--policy", "fcfs"});
  EXPECT_EQ(bad.status, kExitData);
  EXPECT_THAT(bad.err, HasSubstr("row 3"));

  const auto json = temp_path("w.json");
  std::ofstream(json) << serialize_workload(paper_case(4), WorkloadFormat::kJson);
  Result ok = invoke({"run", "--workload", json.string(), "--policy", "smdrr", "--convention",
                      "paper", "--format", "csv"});
  ASSERT_EQ(ok.status, kExitOk) << ok.err;
  EXPECT_THAT(ok.out, HasSubstr("smdrr,P5,21,68,148,216,216,148,127\n"));
  std::filesystem::remove(csv);
  std::filesystem::remove(json);
}

TEST(CliRunTest, TextReport) {
  Result r = invoke({"run", "--case", "4", "--policy", "rr:20", "--convention", "paper"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("case-4 / rr:20 (convention: paper)"));
  EXPECT_THAT(r.out, HasSubstr("TQ 20  ATT 125.6  AWT 82.4  CS 11"));
}

TEST(CliRunTest, GanttOutputs) {
  Result ascii = invoke({"run", "--case", "1", "--policy", "smdrr", "--gantt", "ascii"});
  ASSERT_EQ(ascii.status, kExitOk);
  EXPECT_THAT(ascii.out, HasSubstr("0     20         60          101"));

  const auto svg_path = temp_path("g.svg");
  Result svg = invoke({"run", "--case", "1", "--policy", "smdrr", "--gantt", "svg", "--out",
                       svg_path.string()});
  ASSERT_EQ(svg.status, kExitOk);
  EXPECT_TRUE(svg.out.empty());
  std::ifstream in(svg_path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_THAT(contents.str(), HasSubstr("<svg "));
  std::filesystem::remove(svg_path);

  EXPECT_EQ(invoke({"run", "--case", "1", "--policy", "smdrr", "--policy", "fcfs", "--gantt",
                    "svg"})
                .status,
            kExitUsage);
}

TEST(CliRunTest, GeneratedWorkloadSource) {
  Result r = invoke({"run", "--n", "6", "--burst", "5..9", "--seed", "3", "--policy", "smdrr",
                     "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["workload"], "generated-3");
}

TEST(CliCompareTest, CaseFourRows) {
  Result r = invoke({"compare", "--case", "4", "--policy", "rr:20", "--policy", "smdrr",
                     "--convention", "paper", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "algorithm,tq,tat,wt,cs\n"
            "RR,20,125.6,82.4,11\n"
            "SMDRR,\"18,35,25,43\",108.6,65.4,7\n");
}

TEST(CliCompareTest, CaseTwoDefaultConvention) {
  Result r = invoke({"compare", "--case", "2", "--policy", "rr:20", "--policy", "smdrr",
                     "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "algorithm,tq,tat,wt,cs\n"
            "RR,20,140.4,98,11\n"
            "SMDRR,\"34,22,2,1\",129.2,86.8,10\n");
}

TEST(CliCompareTest, OnePolicyIsUsageError) {
  EXPECT_EQ(invoke({"compare", "--case", "1", "--policy", "smdrr"}).status, kExitUsage);
}

TEST(CliCompareTest, PolicyOrderOnlyPermutesRows) {
  Result a = invoke({"compare", "--case", "3", "--policy", "sjf", "--policy", "smdrr",
                     "--format", "csv"});
  Result b = invoke({"compare", "--case", "3", "--policy", "smdrr", "--policy", "sjf",
                     "--format", "csv"});
  auto rows = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  };
  auto ra = rows(a.out), rb = rows(b.out);
  ASSERT_EQ(ra.size(), 3u);
  EXPECT_EQ(ra[1], rb[2]);
  EXPECT_EQ(ra[2], rb[1]);
}

TEST(CliGenerateTest, DegenerateArrivalsAndDeterminism) {
  std::vector<std::string> args = {"generate", "--n", "5", "--burst", "10..100", "--arrival",
                                   "0..0", "--seed", "7", "--format", "csv"};
  Result a = invoke(args);
  Result b = invoke(args);
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Workload w = parse_workload(a.out, WorkloadFormat::kCsv);
  ASSERT_EQ(w.size(), 5u);
  for (const auto& p : w.processes()) {
    EXPECT_EQ(p.arrival, 0);
    EXPECT_GE(p.burst, 10);
    EXPECT_LE(p.burst, 100);
  }
  golden::expect_matches("generate_seed7.csv", a.out);
}

TEST(CliGenerateTest, InvalidRangesAreUsageErrors) {
  EXPECT_EQ(invoke({"generate", "--n", "5", "--burst", "0..10"}).status, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--n", "5", "--burst", "10..5"}).status, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--n", "5", "--burst", "ten"}).status, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--n", "0", "--burst", "1..5"}).status, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--burst", "1..5"}).status, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--n", "2", "--burst", "1..5", "--format", "text"}).status,
            kExitUsage);
}

TEST(CliPaperCasesTest, GoldenOutput) {
  Result r = invoke({"paper-cases"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("RR,20,144,85.75,12\n"));
  EXPECT_THAT(r.out, HasSubstr("SMDRR,\"41,46,3\",124.25,66,6\n"));
  golden::expect_matches("paper_cases.csv", r.out);
}

TEST(CliPaperCasesTest, BarData) {
  Result r = invoke({"paper-cases", "--bars", "cs"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("case-2,SMDRR,10\n"));
}

TEST(CliParseRangeTest, Ranges) {
  EXPECT_EQ(parse_range("3..9"), (std::pair<Millis, Millis>{3, 9}));
  EXPECT_EQ(parse_range("0..0"), (std::pair<Millis, Millis>{0, 0}));
  EXPECT_THROW(parse_range("3-9"), std::invalid_argument);
  EXPECT_THROW(parse_range("..9"), std::invalid_argument);
  EXPECT_THROW(parse_range("3..x"), std::invalid_argument);
}

// The installed binary, exercised as a user would.
int run_binary(const std::string& args) {
  const std::string command = std::string(SMDRR_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(CliBinaryTest, ExitCodes) {
  EXPECT_EQ(run_binary("paper-cases"), 0);
  EXPECT_EQ(run_binary("run --workload /nonexistent/w.csv --policy smdrr"), 1);
  EXPECT_EQ(run_binary("run --case 1 --policy rr"), 2);
  EXPECT_EQ(run_binary("compare --case 1 --policy smdrr"), 2);
}

}  // namespace
}  // namespace smdrr::cli
