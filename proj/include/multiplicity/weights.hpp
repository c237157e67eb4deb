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

#ifndef MULTIPLICITY_WEIGHTS_HPP_
#define MULTIPLICITY_WEIGHTS_HPP_

#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "multiplicity/edge_mask.hpp"
#include "multiplicity/geometry.hpp"

namespace multiplicity {

inline constexpr unsigned kDecimalDigits = 60;
using Decimal =
    boost::multiprecision::number<boost::multiprecision::cpp_dec_float<kDecimalDigits>>;

Decimal to_decimal(const Rational& value);
Decimal sqrt_rational(const Rational& value);
// Relative tie threshold for weight sums.
Decimal default_theta();

// Per-segment weights. Segments share a length class iff their lengths are
// provably equal (equal exact squared length, or equal span on the regular
// polygon model).
class WeightModel {
 public:
  // Euclidean lengths of an exact point set.
  static WeightModel euclidean(const PointSet& ps);
  // Unit-circle regular n-gon: a span-i chord has length 2 sin(i pi / n).
  static WeightModel regular_polygon(int n);
  // euclidean() for exact sets, regular_polygon() for abstract convex ones.
  static WeightModel for_pointset(const PointSet& ps);

  int n() const { return n_; }
  const Decimal& weight(int edge) const { return weights_[edge]; }
  const Decimal& weight(Edge e) const { return weights_[edge_index(n_, e)]; }
  double approx(int edge) const { return approx_[edge]; }
  int length_class(int edge) const { return classes_[edge]; }

  Decimal total(const EdgeMask& edges) const;
  double approx_total(const EdgeMask& edges) const;
  // Sorted length classes of the member segments.
  std::vector<int> class_multiset(const EdgeMask& edges) const;

 private:
  int n_ = 0;
  std::vector<Decimal> weights_;
  std::vector<double> approx_;
  std::vector<int> classes_;
};

}  // namespace multiplicity

#endif  // MULTIPLICITY_WEIGHTS_HPP_
