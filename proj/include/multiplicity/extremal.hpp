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

#ifndef MULTIPLICITY_EXTREMAL_HPP_
#define MULTIPLICITY_EXTREMAL_HPP_

#include <string_view>
#include <vector>

#include "multiplicity/enumeration.hpp"
#include "multiplicity/weights.hpp"

namespace multiplicity {

enum class Objective { kMin, kMax };
enum class CrossingPolicy { kForbidden, kAllowed };

std::string_view to_string(Objective objective);
std::string_view to_string(CrossingPolicy policy);
Objective parse_objective(std::string_view name);  // "min"/"shortest", "max"/"longest"
CrossingPolicy parse_crossing_policy(std::string_view name);  // "forbidden"/"allowed"

struct ExtremalOptions {
  EnumerationOptions enumeration;
  // Relative: sums within theta * |extremal weight| tie.
  Decimal theta = default_theta();
  int max_witnesses = 64;
};

struct ExtremalReport {
  GraphClass graph_class = GraphClass::kTriangulation;
  Objective objective = Objective::kMax;
  CrossingPolicy crossings = CrossingPolicy::kForbidden;
  Decimal weight = 0;
  long long multiplicity = 0;
  // Tied graphs whose multiset of length classes differs from the first
  // witness: equal within theta but not proven equal.
  long long unproven_ties = 0;
  long long examined = 0;
  std::vector<EdgeGraph> witnesses;
};

// Enumerates the class (crossing-free unless crossings are allowed) and
// counts the graphs of extremal weight. Throws InvalidInput for an empty
// class.
ExtremalReport extremal_multiplicity(const PointSet& ps, GraphClass cls, Objective objective,
                                     CrossingPolicy crossings, const WeightModel& weights,
                                     const ExtremalOptions& options = {});
// Uses WeightModel::for_pointset(ps).
ExtremalReport extremal_multiplicity(const PointSet& ps, GraphClass cls, Objective objective,
                                     CrossingPolicy crossings,
                                     const ExtremalOptions& options = {});

// Weight of the star at any vertex of the unit-circle regular n-gon.
Decimal star_weight(int n, int p = 0);

// The longest non-crossing spanning tree on convex_polygon(n), weighted by
// the regular n-gon chord table, weighs star_weight(n). Needs 3 <= n <= 9.
bool verify_lemma_L1(int n);

// For every i in 1..floor(n/2): at most n-2i+1 tree edges have span >= i.
bool span_profile_bound_check(const EdgeGraph& tree, int n);

}  // namespace multiplicity

#endif  // MULTIPLICITY_EXTREMAL_HPP_
