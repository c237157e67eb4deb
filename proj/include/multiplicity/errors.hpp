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

#ifndef MULTIPLICITY_ERRORS_HPP_
#define MULTIPLICITY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace multiplicity {

// Malformed input: bad JSON, degenerate geometry, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration or search would exceed the configured size caps.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A generator produced a set that fails its own structural validator.
class ConstructionFailure : public InvalidInput {
 public:
  explicit ConstructionFailure(const std::string& what) : InvalidInput(what) {}
};

}  // namespace multiplicity

#endif  // MULTIPLICITY_ERRORS_HPP_
