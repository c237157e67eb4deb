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

#ifndef MULTIPLICITY_CONVEX_TOUR_HPP_
#define MULTIPLICITY_CONVEX_TOUR_HPP_

#include <vector>

#include "multiplicity/geometry.hpp"
#include "multiplicity/weights.hpp"

namespace multiplicity {

// A Hamiltonian cycle given as a vertex sequence (indices into the point
// set). Spans are measured in the convex cyclic order.
struct Tour {
  std::vector<int> order;
  Decimal weight = 0;
  std::vector<int> spans;
};

// Canonical form up to rotation and reflection: starts at the smallest
// index, second vertex smaller than the last.
std::vector<int> canonical_cycle(std::vector<int> order);

// Counterclockwise order of a point set in convex position, by exact
// angular sort around the centroid. Identity for abstract convex sets.
// Throws InvalidInput when the points are not in convex position.
std::vector<int> convex_order(const PointSet& ps);

struct LongestTours {
  // Tours tying the maximum weight (relative threshold theta).
  std::vector<Tour> tours;
  // Every candidate examined: one for odd n, n/2 for even n.
  std::vector<Tour> candidates;
};

LongestTours longest_convex_tours(const PointSet& ps, const WeightModel& weights,
                                  const Decimal& theta = default_theta());
LongestTours longest_convex_tours(const PointSet& ps);

// The hull-order tour.
Tour shortest_convex_tour(const PointSet& ps, const WeightModel& weights);
Tour shortest_convex_tour(const PointSet& ps);

// Every two tour edges cross or share an endpoint.
bool is_thrackle(const Tour& tour, const PointSet& ps);

}  // namespace multiplicity

#endif  // MULTIPLICITY_CONVEX_TOUR_HPP_
