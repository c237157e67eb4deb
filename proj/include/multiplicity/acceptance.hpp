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

#ifndef MULTIPLICITY_ACCEPTANCE_HPP_
#define MULTIPLICITY_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace multiplicity {

struct Check {
  std::string label;
  std::string observed;
  std::string expected;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  bool pass() const;
};

enum class Suite { kAll, kEnumeration, kPaperConstants, kWeighted };
std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);
std::vector<int> suite_criteria(Suite suite);

struct AcceptanceOptions {
  int workers = 1;
  std::uint64_t seed = 2026;
  // Random restarts for the optimizer runs inside criteria 5 and 6.
  int restarts = 2;
};

// Criteria 1..10. Deterministic for a fixed seed; no timings in the output.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_suite(Suite suite, const AcceptanceOptions& options = {});

// "criterion 3 PASS middle region ..." style line.
std::string summary_line(const CriterionResult& result);

}  // namespace multiplicity

#endif  // MULTIPLICITY_ACCEPTANCE_HPP_
