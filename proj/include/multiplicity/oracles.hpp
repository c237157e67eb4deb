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

#ifndef MULTIPLICITY_ORACLES_HPP_
#define MULTIPLICITY_ORACLES_HPP_

// Slow reference computations used to cross-check the main modules. None of
// them shares code paths with the enumeration search or the bound optimizer.

#include <cstdint>
#include <random>
#include <vector>

#include "multiplicity/geometry.hpp"
#include "multiplicity/weights.hpp"

namespace multiplicity::oracle {

// C_n by the convolution recurrence.
BigInt catalan_recurrence(int n);

// Non-crossing spanning trees on n convex points: C(3n-3, n-1) / (2n-1).
BigInt plane_tree_formula(int n);

// Labeled trees decoded from all n^(n-2) Pruefer sequences, kept when no two
// edges interleave in convex order. n <= 8.
BigInt plane_trees_by_pruefer(int n);

// Triangulations of the region between the chains of a double chain with m
// points per side, found by trying every set of cross edges of the right
// size. 2 <= m <= 6.
BigInt middle_region_by_subsets(int m);

// Non-crossing trees on i lower and j upper convex points using only
// lower-upper edges, by trying every edge subset of size i+j-1. i, j <= 4.
BigInt bridges_by_subsets(int i, int j);

// a_0..a_k by trying every set of chords above a convex (k+2)-chain: a set
// counts for type r when it is crossing-free, covers r interior vertices
// and has exactly r chords (every pocket triangulated). k <= 5.
std::vector<BigInt> chain_reductions_by_subsets(int k);

struct TourOptimum {
  Decimal weight = 0;
  // Cycles tying the optimum (relative 1e-30), as canonical vertex orders.
  std::vector<std::vector<int>> tours;
};

// Every Hamiltonian cycle by permutation, optionally restricted to
// crossing-free ones. n <= 11.
TourOptimum brute_force_tours(const PointSet& ps, const WeightModel& weights, bool longest,
                              bool non_crossing);

// Edges x->y, u->v of a convex-position tour (vertex order in cyclic
// position order) are anti-parallel when they are disjoint and xu crosses yv.
bool has_anti_parallel_pair(const std::vector<int>& tour);

// Smallest span among the tour edges, positions being cyclic indices.
int min_tour_span(const std::vector<int>& tour, int n);

// Integer points in [0, range)^2 in general position.
PointSet random_general_position(int n, std::mt19937_64& rng, int range = 1000);

// Rational points near the unit circle at random angles, in random order.
PointSet random_convex(int n, std::mt19937_64& rng);

// Triangulation base for k = 1, 2, 3 in the per-k closed forms.
double tri_closed_form(int k, const std::vector<double>& alpha);

// Maximum of the triangulation objective over the simplex: maximizing
// sum alpha_i (log2 a_i - i) + H(alpha) gives log2 sum 2^-i a_i.
double tri_optimum_closed_form(int k);

// st objective at z = 1 as a function of alpha_11, written out by hand.
double st_single_bridge(double alpha);
double cf_single_bridge(double alpha);

}  // namespace multiplicity::oracle

#endif  // MULTIPLICITY_ORACLES_HPP_
