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

#ifndef SMDRR_CLI_HPP_
#define SMDRR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smdrr/workload.hpp"

namespace smdrr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

// Parses "a..b" into {a, b}; throws std::invalid_argument.
std::pair<Millis, Millis> parse_range(std::string_view text);

// Entry point for `smdrr <command> ...`. `args` excludes the program name.
// Commands: run, compare, generate, paper-cases. Returns the exit status:
// 0 success, 1 input/data error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace smdrr::cli

#endif  // SMDRR_CLI_HPP_
