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

#ifndef MULTIPLICITY_BOUND_LAB_HPP_
#define MULTIPLICITY_BOUND_LAB_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multiplicity {

// Binary entropy in bits, 0 log 0 = 0. Throws InvalidInput outside [0, 1].
double entropy(double q);
// -sum a_i log2 a_i over a probability vector (sum 1 within 1e-9).
double gen_entropy(std::span<const double> alpha);
// Partial derivatives of gen_entropy, ignoring the simplex constraint.
std::vector<double> gen_entropy_gradient(std::span<const double> alpha);

// 2 (k+2)^(1/(k+1)): per-point base of the triangulation count of an
// almost convex chain with reflex chains of length k.
double tri_growth_rate(int k);

// Per-point base for the generalized double chain D(n, k^r), with
// alpha = (alpha_0..alpha_k) the fractions of reduction types. 1 <= k <= 4.
double tri_lower_objective(int k, std::span<const double> alpha);

// Bridge-type fractions alpha_ij, 1 <= i <= j <= z, stored row-major over
// the upper triangle. The objective uses the symmetric completion.
class AlphaMatrix {
 public:
  explicit AlphaMatrix(int z);
  AlphaMatrix(int z, std::vector<double> upper);

  int order() const { return z_; }
  // 1-based; (i, j) and (j, i) address the same entry.
  double at(int i, int j) const;
  void set(int i, int j, double value);
  const std::vector<double>& upper() const { return upper_; }
  // Row-major z*z symmetric completion.
  std::vector<double> full() const;

  static int upper_size(int z) { return z * (z + 1) / 2; }

 private:
  int index(int i, int j) const;

  int z_;
  std::vector<double> upper_;
};

struct BridgeTotals {
  double alpha_all = 0;  // alpha_**
  double alpha_lower = 0;  // alpha_L
  double alpha_upper = 0;  // alpha_U
  double n_lower = 0;  // n_L / m
  double n_upper = 0;  // n_U / m
};

// `full` is a row-major z*z matrix, rows indexed by the lower-chain size.
BridgeTotals bridge_totals(int z, std::span<const double> full);

// Per-point base of the spanning-tree bound on the double chain.
double st_lower_objective(const AlphaMatrix& m);
// Same on an arbitrary (possibly asymmetric) row-major z*z matrix.
double st_lower_objective(int z, std::span<const double> full);
// Cycle-free graphs: no link term, forests on convex chains grow as 8.22469^n.
double cf_lower_objective(const AlphaMatrix& m);
double cf_lower_objective(int z, std::span<const double> full);

// Per-point log2 growth of the spanning-cycle bound for split point a in
// (0, 1/2): the larger of the two branches maximized over beta = k/n.
double sc_upper_rate(double a);

struct ScOptimum {
  double a = 0;
  double rate = 0;  // log2 per point
  double factor = 0;  // 2^rate
  double bound = 0;  // 30 * factor
  // The two branches at the optimum, where they meet.
  double small_branch = 0;
  double large_branch = 0;
};
ScOptimum minimize_sc_upper_rate(double tol = 1e-12);

struct DcUpperBound {
  double base = 0;  // 3 * 8.225
  double reported = 0;  // rounded up to two decimals
  int checked_up_to = 0;
  // max_k C(m,k)^2 4^k < 9^m held for every m <= checked_up_to.
  bool inequality_holds = false;
};
DcUpperBound dc_upper_bound(int check_up_to = 30);

enum class BoundObjective { kTri, kSt, kCf };
std::string_view to_string(BoundObjective objective);
BoundObjective parse_bound_objective(std::string_view name);

// Evaluates an objective on a flat parameter vector: alpha_0..alpha_k for
// tri, the upper triangle for st/cf.
double evaluate_bound(BoundObjective objective, int order, std::span<const double> params);

// The parameters printed in the source tables, where they exist.
std::optional<std::vector<double>> published_parameters(BoundObjective objective, int order);
// The bases printed in the source (tri: text values; st/cf: the z table).
std::optional<double> published_base(BoundObjective objective, int order);

struct OptimizeOptions {
  int restarts = 8;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int max_iterations = 20000;
  // Starts run on this many threads; the result does not depend on it.
  int workers = 1;
};

struct BoundReport {
  std::string objective;
  int order = 0;
  double base = 0;
  std::vector<double> params;
  int restarts = 0;
  long long iterations = 0;
  double tol = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  // Objective at the published parameters, when there are any.
  std::optional<double> published_start;
};

// Multi-start Nelder-Mead on the projected parameter space, then
// coordinate refinement. Published tables (or the padded table of the next
// smaller order) are always among the starts. Deterministic per seed.
BoundReport optimize(BoundObjective objective, int order, const OptimizeOptions& options = {});

}  // namespace multiplicity

#endif  // MULTIPLICITY_BOUND_LAB_HPP_
