// Copyright 2026 The Multiplicity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULTIPLICITY_CLI_HPP_
#define MULTIPLICITY_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace multiplicity {

#ifndef MULTIPLICITY_VERSION
#define MULTIPLICITY_VERSION "0.1.0"
#endif

inline constexpr const char* kVersion = MULTIPLICITY_VERSION;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalidInput = 2,
  kExitLimitExceeded = 3,
};

// Parses argv-style arguments (args[0] is the program name) and runs one
// command. Reports go to `out` unless --out names a file; diagnostics go
// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multiplicity

#endif  // MULTIPLICITY_CLI_HPP_
