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

#include "multiplicity/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "multiplicity/constructions.hpp"
#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

// Double-precision screening window; candidates inside it are re-ranked in
// Decimal.
constexpr double kScreen = 1e-9;

}  // namespace

std::string_view to_string(Objective objective) {
  return objective == Objective::kMin ? "min" : "max";
}

std::string_view to_string(CrossingPolicy policy) {
  return policy == CrossingPolicy::kAllowed ? "allowed" : "forbidden";
}

Objective parse_objective(std::string_view name) {
  if (name == "min" || name == "shortest" || name == "minimum") return Objective::kMin;
  if (name == "max" || name == "longest" || name == "maximum") return Objective::kMax;
  throw InvalidInput("unknown objective \"" + std::string(name) + "\"");
}

CrossingPolicy parse_crossing_policy(std::string_view name) {
  if (name == "forbidden" || name == "no" || name == "false") return CrossingPolicy::kForbidden;
  if (name == "allowed" || name == "yes" || name == "true") return CrossingPolicy::kAllowed;
  throw InvalidInput("unknown crossing policy \"" + std::string(name) + "\"");
}

ExtremalReport extremal_multiplicity(const PointSet& ps, GraphClass cls, Objective objective,
                                     CrossingPolicy crossings, const WeightModel& weights,
                                     const ExtremalOptions& options) {
  if (weights.n() != ps.size()) throw InvalidInput("weight model size does not match point set");
  EnumerationOptions eo = options.enumeration;
  eo.crossings_allowed = crossings == CrossingPolicy::kAllowed;
  // Larger is better after the sign flip.
  const double sign = objective == Objective::kMax ? 1.0 : -1.0;
  double best = -INFINITY;
  std::vector<std::pair<double, EdgeMask>> pool;
  long long examined = 0;
  enumerate(
      ps, cls,
      [&](const EdgeGraph& g) {
        ++examined;
        const double w = sign * weights.approx_total(g.edges);
        const double window = kScreen * std::max(1.0, std::abs(best));
        if (w < best - window) return;
        if (w > best) {
          best = w;
          const double cut = best - kScreen * std::max(1.0, std::abs(best));
          std::erase_if(pool, [&](const auto& c) { return c.first < cut; });
        }
        pool.emplace_back(w, g.edges);
      },
      eo);
  if (pool.empty())
    throw InvalidInput("no " + std::string(to_string(cls)) + " exists on this point set");

  std::vector<std::pair<Decimal, EdgeMask>> exact;
  exact.reserve(pool.size());
  for (const auto& [w, m] : pool) exact.emplace_back(weights.total(m), m);
  Decimal extreme = exact.front().first;
  for (const auto& [w, m] : exact)
    if (objective == Objective::kMax ? w > extreme : w < extreme) extreme = w;
  const Decimal tol = options.theta * boost::multiprecision::abs(extreme);

  ExtremalReport report;
  report.graph_class = cls;
  report.objective = objective;
  report.crossings = crossings;
  report.weight = extreme;
  report.examined = examined;
  std::vector<int> reference;
  for (const auto& [w, m] : exact) {
    if (boost::multiprecision::abs(w - extreme) > tol) continue;
    const auto classes = weights.class_multiset(m);
    if (report.multiplicity == 0)
      reference = classes;
    else if (classes != reference)
      ++report.unproven_ties;
    ++report.multiplicity;
    if (static_cast<int>(report.witnesses.size()) < options.max_witnesses)
      report.witnesses.push_back(EdgeGraph{ps.size(), m});
  }
  return report;
}

ExtremalReport extremal_multiplicity(const PointSet& ps, GraphClass cls, Objective objective,
                                     CrossingPolicy crossings, const ExtremalOptions& options) {
  return extremal_multiplicity(ps, cls, objective, crossings, WeightModel::for_pointset(ps),
                               options);
}

Decimal star_weight(int n, int p) {
  if (n < 3) throw InvalidInput("star weight needs n >= 3");
  if (p < 0 || p >= n) throw InvalidInput("star centre out of range");
  const auto chord = regular_chord_lengths(n);
  const int k = n / 2;
  Decimal sum = 0;
  for (int i = 1; i < k; ++i) sum += 2 * chord[i];
  sum += n % 2 == 1 ? 2 * chord[k] : chord[k];
  return sum;
}

bool verify_lemma_L1(int n) {
  if (n < 3 || n > 9) throw InvalidInput("star optimality check covers 3 <= n <= 9");
  const PointSet ps = convex_polygon(n);
  const auto report = extremal_multiplicity(ps, GraphClass::kSpanningTree, Objective::kMax,
                                            CrossingPolicy::kForbidden,
                                            WeightModel::regular_polygon(n));
  const Decimal star = star_weight(n);
  return boost::multiprecision::abs(report.weight - star) <= default_theta() * star;
}

bool span_profile_bound_check(const EdgeGraph& tree, int n) {
  if (tree.n != n) throw InvalidInput("tree size does not match n");
  std::vector<int> at_least(n / 2 + 2, 0);
  for (const Edge& e : tree.edge_list()) {
    const int span = edge_span(n, e);
    for (int i = 1; i <= span; ++i) ++at_least[i];
  }
  for (int i = 1; i <= n / 2; ++i)
    if (at_least[i] > n - 2 * i + 1) return false;
  return true;
}

}  // namespace multiplicity
