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

#ifndef MULTIPLICITY_CONSTRUCTIONS_HPP_
#define MULTIPLICITY_CONSTRUCTIONS_HPP_

#include <optional>
#include <vector>

#include "multiplicity/geometry.hpp"
#include "multiplicity/weights.hpp"

namespace multiplicity {

// r hull edges, each replaced by a reflex chain of k interior vertices.
struct ChainSpec {
  int r = 1;
  int k = 0;
  // Height of the reflex bumps. Defaults to 1/N^3 for an N-point chain.
  std::optional<Rational> flatness;
};

// x-monotone chain of r(k+1)+1 points, left to right. Hull vertices lie on
// a shallow upward parabola; reflex vertices sit just above their chord.
// Throws ConstructionFailure when the visibility check fails.
PointSet almost_convex_chain(const ChainSpec& spec);

// Lower chain (indices 0..m-1, mirrored) followed by the upper chain
// (m..2m-1), both left to right, m = r(k+1)+1.
PointSet generalized_double_chain(const ChainSpec& spec);

// Pairs (p, q), p < q, of chain vertices that see each other above the
// chain: every vertex strictly between them lies strictly below pq.
bool chain_vertices_visible(const std::vector<Point>& chain, int p, int q);

// floor(n/4) translated copies of {a, b, c, d}, stored as a, b, c, d per
// copy, plus a horizontal pair at distance 2n on top when n = 2 (mod 4).
PointSet s4_matching_gadget(int n);

struct TourGadget {
  PointSet points;
  // Cyclic hull order as declared by the construction.
  std::vector<int> hull;
  // The tours the construction makes tie, as cyclic vertex sequences.
  std::vector<std::vector<int>> tours;
};

// Point order: x_1, then a_i, b_i, c_i, d_i for i = 1..k. delta defaults
// to the first of 1/(50 k^2), 1/(200 k^2), ... that validates. Throws
// ConstructionFailure naming the violated condition.
TourGadget deltoid_tour_gadget(int k, std::optional<Rational> delta = std::nullopt);

// Same frame with five points on a circle around each a_i instead of the
// deltoid tip: x_1, then a_i followed by its five circle points.
TourGadget hexagon_tour_gadget(int k, std::optional<Rational> delta = std::nullopt);

// floor(n/3) triangle groups (a, b, c) around the unit circle; the n mod 3
// extra points join the last group. eps defaults to 1/n^2.
PointSet rotated_triangle_gadget(int n, std::optional<Rational> eps = std::nullopt);

// Rational point on the unit circle within about 1e-9 of angle theta.
Point rational_unit_point(double theta);

// Rational approximation of the regular n-gon on the unit circle, in
// counterclockwise index order.
PointSet convex_polygon(int n);
// l_i = 2 sin(i pi / n) for i = 0..floor(n/2).
std::vector<Decimal> regular_chord_lengths(int n);

}  // namespace multiplicity

#endif  // MULTIPLICITY_CONSTRUCTIONS_HPP_
