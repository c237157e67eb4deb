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

#ifndef MULTIPLICITY_POINTSET_IO_HPP_
#define MULTIPLICITY_POINTSET_IO_HPP_

#include <string>

#include "json.hpp"
#include "multiplicity/geometry.hpp"

namespace multiplicity {

// {"mode":"exact","points":[{"x":"3/2","y":"-1/5"},...]} or
// {"mode":"convex","n":10}. Extra keys (e.g. "provenance") are ignored.
nlohmann::json pointset_to_json(const PointSet& ps);
PointSet pointset_from_json(const nlohmann::json& doc);

PointSet load_pointset(const std::string& path);

}  // namespace multiplicity

#endif  // MULTIPLICITY_POINTSET_IO_HPP_
