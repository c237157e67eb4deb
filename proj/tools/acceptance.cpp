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

// Runs the acceptance criteria (all, or the ids given as arguments) and
// prints one PASS/FAIL line per criterion. Exit status 1 when any fails.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <vector>

#include "multiplicity/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace multiplicity;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = suite_criteria(Suite::kAll);
  bool all = true;
  for (int id : ids) {
    CriterionResult result;
    try {
      result = run_criterion(id);
    } catch (const std::exception& e) {
      result.id = id;
      result.title = "error";
      result.checks.push_back({"exception", e.what(), "none", false});
    }
    all = all && result.pass();
    std::printf("%s\n", summary_line(result).c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
