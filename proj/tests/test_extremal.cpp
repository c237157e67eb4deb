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

#include <random>

#include "doctest.h"
#include "multiplicity/constructions.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/extremal.hpp"
#include "multiplicity/oracles.hpp"

using namespace multiplicity;

namespace {

EdgeGraph graph_of(int n, const std::vector<Edge>& edges) {
  EdgeGraph g{n, EdgeMask{}};
  for (const Edge& e : edges) g.edges.set(edge_index(n, e));
  return g;
}

bool crossing_free(const EdgeGraph& g, const PointSet& ps) {
  const auto edges = g.edge_list();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (segments_cross(edges[a], edges[b], ps)) return false;
  return true;
}

}  // namespace

TEST_CASE("star weights on the regular polygon") {
  const Decimal tol("1e-50");
  CHECK(abs(star_weight(4) - (2 * sqrt(Decimal(2)) + 2)) < tol);
  CHECK(abs(star_weight(6) - (2 * (1 + sqrt(Decimal(3))) + 2)) < tol);
  const auto chords = regular_chord_lengths(7);
  CHECK(abs(star_weight(7) - 2 * (chords[1] + chords[2] + chords[3])) < tol);
}

TEST_CASE("longest crossing-free spanning trees on convex sets are stars") {
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(verify_lemma_L1(n));
  }
}

TEST_CASE("span profile bound") {
  const int n = 6;
  // Path along the hull and the star at 0.
  CHECK(span_profile_bound_check(graph_of(n, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}), n));
  CHECK(span_profile_bound_check(graph_of(n, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}), n));
  // Zig-zag of long chords: five edges of span at least two.
  CHECK_FALSE(span_profile_bound_check(graph_of(n, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}), n));
  for (int m = 4; m <= 8; ++m) {
    const auto rep = extremal_multiplicity(PointSet::abstract_convex(m), GraphClass::kSpanningTree,
                                           Objective::kMax, CrossingPolicy::kForbidden);
    for (const auto& g : rep.witnesses) REQUIRE(span_profile_bound_check(g, m));
  }
}

TEST_CASE("extremal examples") {
  const auto s4 = extremal_multiplicity(s4_matching_gadget(8), GraphClass::kPerfectMatching,
                                        Objective::kMax, CrossingPolicy::kForbidden);
  CHECK(s4.multiplicity == 4);
  CHECK(s4.unproven_ties == 0);

  const auto tri = extremal_multiplicity(rotated_triangle_gadget(9), GraphClass::kSpanningCycle,
                                         Objective::kMin, CrossingPolicy::kAllowed);
  CHECK(tri.multiplicity == 8);

  const auto hexagon = extremal_multiplicity(convex_polygon(6), GraphClass::kSpanningCycle,
                                             Objective::kMin, CrossingPolicy::kAllowed);
  CHECK(hexagon.multiplicity == 1);

  const auto star = extremal_multiplicity(PointSet::abstract_convex(7), GraphClass::kSpanningTree,
                                          Objective::kMax, CrossingPolicy::kForbidden);
  // Stars tie with other trees of the same span profile.
  CHECK(star.multiplicity >= 7);
  CHECK(abs(star.weight - star_weight(7)) < Decimal("1e-40"));
}

TEST_CASE("witnesses respect the crossing policy and tie the optimum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const PointSet ps = oracle::random_general_position(8, rng);
    const WeightModel w = WeightModel::euclidean(ps);
    for (auto cls : {GraphClass::kPerfectMatching, GraphClass::kSpanningTree}) {
      const auto rep = extremal_multiplicity(ps, cls, Objective::kMax, CrossingPolicy::kForbidden);
      REQUIRE(rep.multiplicity >= 1);
      REQUIRE(rep.witnesses.size() == static_cast<std::size_t>(rep.multiplicity));
      for (const auto& g : rep.witnesses) {
        REQUIRE(crossing_free(g, ps));
        REQUIRE(abs(w.total(g.edges) - rep.weight) <= default_theta() * rep.weight);
      }
    }
  }
}

TEST_CASE("the shortest tour never crosses itself") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const PointSet ps = oracle::random_general_position(7, rng);
    const auto any = extremal_multiplicity(ps, GraphClass::kSpanningCycle, Objective::kMin,
                                           CrossingPolicy::kAllowed);
    const auto plane = extremal_multiplicity(ps, GraphClass::kSpanningCycle, Objective::kMin,
                                             CrossingPolicy::kForbidden);
    REQUIRE(abs(any.weight - plane.weight) < Decimal("1e-40"));
    REQUIRE(any.multiplicity == plane.multiplicity);
  }
}

TEST_CASE("multiplicities are stable under theta changes") {
  const PointSet gadgets[] = {s4_matching_gadget(8), rotated_triangle_gadget(9)};
  const GraphClass classes[] = {GraphClass::kPerfectMatching, GraphClass::kSpanningCycle};
  const Objective objectives[] = {Objective::kMax, Objective::kMin};
  const CrossingPolicy policies[] = {CrossingPolicy::kForbidden, CrossingPolicy::kAllowed};
  for (int i = 0; i < 2; ++i) {
    ExtremalOptions base;
    ExtremalOptions wide;
    wide.theta = base.theta * 10;
    ExtremalOptions narrow;
    narrow.theta = base.theta / 10;
    const auto m = [&](const ExtremalOptions& o) {
      return extremal_multiplicity(gadgets[i], classes[i], objectives[i], policies[i], o).multiplicity;
    };
    const long long reference = m(base);
    CHECK(m(wide) == reference);
    CHECK(m(narrow) == reference);
  }
}

TEST_CASE("the longest matching of a deltoid frame is unique and crossing-free") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const TourGadget g = deltoid_tour_gadget(k);
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) {
      pts.push_back(g.points[1 + 4 * i]);      // a_i
      pts.push_back(g.points[1 + 4 * i + 2]);  // c_i, the middle spoke
    }
    const PointSet ps = PointSet::exact(pts);
    const auto rep = extremal_multiplicity(ps, GraphClass::kPerfectMatching, Objective::kMax,
                                           CrossingPolicy::kAllowed);
    REQUIRE(rep.multiplicity == 1);
    const EdgeGraph& m = rep.witnesses.front();
    for (int i = 0; i < k; ++i) CHECK(m.contains(make_edge(2 * i, 2 * i + 1)));
    CHECK(crossing_free(m, ps));
  }
}

TEST_CASE("invalid extremal requests") {
  CHECK_THROWS_AS(extremal_multiplicity(convex_polygon(5), GraphClass::kPerfectMatching,
                                        Objective::kMax, CrossingPolicy::kForbidden),
                  InvalidInput);
  CHECK_THROWS_AS(parse_objective("longestest"), InvalidInput);
  CHECK_THROWS_AS(parse_crossing_policy("sometimes"), InvalidInput);
  CHECK_THROWS_AS(star_weight(2), InvalidInput);
  CHECK(parse_objective("shortest") == Objective::kMin);
  CHECK(parse_crossing_policy("allowed") == CrossingPolicy::kAllowed);
}
