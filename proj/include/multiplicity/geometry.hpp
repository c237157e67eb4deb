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

#ifndef MULTIPLICITY_GEOMETRY_HPP_
#define MULTIPLICITY_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multiplicity {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (no decimal point). Throws InvalidInput.
Rational parse_rational(const std::string& text);
// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class PointSetMode { kExact, kAbstractConvex };

// A planar point set. Exact sets are checked for general position when
// built; abstract convex sets only carry n and the cyclic index order.
class PointSet {
 public:
  // Throws InvalidInput on a coincident pair or collinear triple.
  static PointSet exact(std::vector<Point> points);
  static PointSet abstract_convex(int n);

  PointSetMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == PointSetMode::kExact; }
  int size() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](int i) const { return points_.at(i); }

 private:
  PointSet() = default;

  PointSetMode mode_ = PointSetMode::kExact;
  int n_ = 0;
  std::vector<Point> points_;
};

struct Edge {
  int i = 0;
  int j = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Builds a normalized edge (i < j). Throws InvalidInput when a == b.
Edge make_edge(int a, int b);

// Candidate segments are indexed lexicographically by (i, j).
inline int edge_count(int n) { return n * (n - 1) / 2; }
int edge_index(int n, Edge e);
Edge edge_at(int n, int index);

// Sign of the signed area of triangle pqr.
int orientation(const Point& p, const Point& q, const Point& r);

Rational squared_distance(const Point& p, const Point& q);

// True iff the relative interiors of the two segments meet. Shared
// endpoints never count. Throws InvalidInput on a degenerate or
// out-of-range edge, or when a == b.
bool segments_cross(Edge a, Edge b, const PointSet& ps);

// Chord interleaving for points in convex position, by cyclic index.
bool chords_interleave(Edge a, Edge b);

struct GeneralPositionViolation {
  std::vector<int> indices;  // a coincident pair or a collinear triple
};

// First coincident pair, otherwise first collinear triple (lexicographic).
std::optional<GeneralPositionViolation> validate_general_position(
    std::span<const Point> points);

// min(|i-j|, n-|i-j|) for vertices indexed in convex cyclic order.
int edge_span(int n, Edge e);

// Counterclockwise hull order starting at the leftmost (then lowest) vertex.
// Abstract convex sets return 0..n-1. Throws InvalidInput when n < 3.
std::vector<int> convex_hull(const PointSet& ps);

}  // namespace multiplicity

#endif  // MULTIPLICITY_GEOMETRY_HPP_
