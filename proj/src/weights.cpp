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

#include "multiplicity/weights.hpp"

#include <algorithm>
#include <map>

#include <boost/math/constants/constants.hpp>

#include "multiplicity/errors.hpp"

namespace multiplicity {

Decimal to_decimal(const Rational& value) {
  return Decimal(boost::multiprecision::numerator(value).str()) /
         Decimal(boost::multiprecision::denominator(value).str());
}

Decimal sqrt_rational(const Rational& value) {
  if (value < 0) throw InvalidInput("square root of a negative value");
  return boost::multiprecision::sqrt(to_decimal(value));
}

Decimal default_theta() { return Decimal("1e-30"); }

WeightModel WeightModel::euclidean(const PointSet& ps) {
  if (!ps.is_exact()) throw InvalidInput("euclidean weights need an exact point set");
  WeightModel model;
  model.n_ = ps.size();
  const int m = edge_count(model.n_);
  model.weights_.reserve(m);
  model.approx_.reserve(m);
  model.classes_.reserve(m);
  std::map<Rational, int> classes;
  for (int e = 0; e < m; ++e) {
    const Edge edge = edge_at(model.n_, e);
    const Rational sq = squared_distance(ps[edge.i], ps[edge.j]);
    auto [it, fresh] = classes.try_emplace(sq, static_cast<int>(classes.size()));
    model.weights_.push_back(sqrt_rational(sq));
    model.approx_.push_back(model.weights_.back().convert_to<double>());
    model.classes_.push_back(it->second);
  }
  return model;
}

WeightModel WeightModel::regular_polygon(int n) {
  WeightModel model;
  model.n_ = n;
  const Decimal pi = boost::math::constants::pi<Decimal>();
  const int m = edge_count(n);
  for (int e = 0; e < m; ++e) {
    const int span = edge_span(n, edge_at(n, e));
    model.weights_.push_back(2 * boost::multiprecision::sin(pi * span / n));
    model.approx_.push_back(model.weights_.back().convert_to<double>());
    model.classes_.push_back(span);
  }
  return model;
}

WeightModel WeightModel::for_pointset(const PointSet& ps) {
  return ps.is_exact() ? euclidean(ps) : regular_polygon(ps.size());
}

Decimal WeightModel::total(const EdgeMask& edges) const {
  Decimal sum = 0;
  edges.for_each([&](int e) { sum += weights_[e]; });
  return sum;
}

double WeightModel::approx_total(const EdgeMask& edges) const {
  double sum = 0;
  edges.for_each([&](int e) { sum += approx_[e]; });
  return sum;
}

std::vector<int> WeightModel::class_multiset(const EdgeMask& edges) const {
  std::vector<int> out;
  edges.for_each([&](int e) { out.push_back(classes_[e]); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multiplicity
