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

#ifndef MULTIPLICITY_ENUMERATION_HPP_
#define MULTIPLICITY_ENUMERATION_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiplicity/edge_mask.hpp"
#include "multiplicity/geometry.hpp"

namespace multiplicity {

enum class GraphClass {
  kAllPlane,
  kForest,
  kPerfectMatching,
  kSpanningTree,
  kSpanningCycle,
  kTriangulation,
};

std::string_view to_string(GraphClass cls);
// Accepts the names printed by to_string ("triangulation", "spanning-tree", ...).
GraphClass parse_graph_class(std::string_view name);

// A graph on a fixed point set, stored as a subset of the candidate segments.
struct EdgeGraph {
  int n = 0;
  EdgeMask edges;

  int size() const { return edges.count(); }
  bool contains(Edge e) const { return edges.test(edge_index(n, e)); }
  std::vector<Edge> edge_list() const;
};

// Pairwise crossing relation over all candidate segments.
class CrossingTable {
 public:
  explicit CrossingTable(const PointSet& ps);
  // No pair crosses; used when crossings are allowed.
  static CrossingTable empty(int n);

  int n() const { return n_; }
  const EdgeMask& crossers(int edge) const { return crossers_[edge]; }
  bool crosses(int a, int b) const { return crossers_[a].test(b); }
  // Segments that cross nothing.
  EdgeMask free_edges() const;

 private:
  CrossingTable() = default;

  int n_ = 0;
  std::vector<EdgeMask> crossers_;
};

struct EnumerationLimits {
  int max_points = 14;
  int max_points_triangulation = 16;
  int max_points_support = 10;

  // Honors MULTIPLICITY_LIMIT_N, which replaces every cap (bounded by kMaxPoints).
  static EnumerationLimits from_environment();
};

struct EnumerationOptions {
  EnumerationLimits limits = EnumerationLimits::from_environment();
  // Candidate segments; all C(n,2) when unset.
  std::optional<EdgeMask> allowed;
  // Ignore crossings entirely (plain graph enumeration).
  bool crossings_allowed = false;
  // Worker threads for count(); shards are disjoint subtrees.
  int workers = 1;
};

using GraphSink = std::function<void(const EdgeGraph&)>;

// Streams every graph of the class exactly once, in a deterministic
// canonical order. Throws LimitExceeded or InvalidInput (odd n for
// perfect matchings, crossings allowed for plane-only classes).
void enumerate(const PointSet& ps, GraphClass cls, const GraphSink& sink,
               const EnumerationOptions& options = {});
std::vector<EdgeGraph> enumerate_all(const PointSet& ps, GraphClass cls,
                                     const EnumerationOptions& options = {});

// Same search as enumerate(), without materializing graphs.
BigInt count(const PointSet& ps, GraphClass cls, const EnumerationOptions& options = {});

// Triangulation count by breadth-first traversal of the flip graph from a
// greedy seed triangulation. Independent of the backtracking search.
BigInt count_triangulations_by_flips(const PointSet& ps,
                                     const EnumerationOptions& options = {});

// For each non-crossing spanning cycle, the number of triangulations
// containing it.
struct SupportTable {
  int n = 0;
  std::vector<EdgeMask> cycles;
  std::vector<long long> support;
  std::vector<EdgeMask> triangulations;

  // Sum over triangulations T of sum over cycles C in T of 1/supp(C).
  Rational identity_sum() const;
};

SupportTable support_table(const PointSet& ps, const EnumerationOptions& options = {});

// Triangulations of the region between two mutually visible m-chains.
BigInt middle_region_triangulation_count(int m);

// Combinatorial types of (i,j)-bridges.
BigInt bridge_type_count(int i, int j);

// a_0..a_k: ways to add edges below a convex (k+2)-vertex chain so that its
// envelope loses exactly i interior vertices, with every pocket triangulated.
std::vector<BigInt> chain_reduction_counts(int k);

}  // namespace multiplicity

#endif  // MULTIPLICITY_ENUMERATION_HPP_
