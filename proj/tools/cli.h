// Copyright 2026 The prslab Authors
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

#ifndef PRSLAB_TOOLS_CLI_H_
#define PRSLAB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace prslab::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvariantFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceError = 3;

// Parses "a", "a..b" and comma separated combinations of both, e.g.
// "4..6,9" -> {4, 5, 6, 9}. Throws ContractViolation on malformed input or
// an empty range.
std::vector<int> ParseRange(std::string_view text);

// Runs one subcommand. `args` excludes the program name. Results go to the
// --out file when given, otherwise to `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prslab::cli

#endif  // PRSLAB_TOOLS_CLI_H_
