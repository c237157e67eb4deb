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

#include "multiplicity/bound_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multiplicity/combinatorics.hpp"
#include "multiplicity/enumeration.hpp"
#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

constexpr double kSimplexSlack = 1e-9;
// Per-point forest growth on convex position, as quoted for the forest bound.
constexpr double kForestBase = 8.22469;

double plogp(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

double small_branch(double a) { return 0.25 * std::log2(30.0) - (0.5 - a); }

double large_branch(double beta) {
  return 0.5 * entropy(std::min(1.0, 2 * beta)) +
         (1 - beta) / 4 * std::log2((4 + beta) / (1 - beta)) + 0.25 * std::log2(5 + 2 * beta) -
         (0.5 - beta);
}

template <class F>
double golden_max(F f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// Grid scan then golden section around the best grid point.
double max_large_branch(double a) {
  constexpr int kGrid = 256;
  const double step = (0.5 - a) / kGrid;
  int best = 0;
  for (int i = 1; i <= kGrid; ++i)
    if (large_branch(a + i * step) > large_branch(a + best * step)) best = i;
  const double lo = a + std::max(0, best - 1) * step;
  const double hi = a + std::min(kGrid, best + 1) * step;
  const double beta = golden_max(large_branch, lo, hi, 1e-12);
  return std::max({large_branch(beta), large_branch(a + best * step)});
}

double bridge_rate(int z, std::span<const double> full, double chain_log2_base, bool links) {
  if (z < 1) throw InvalidInput("bridge order z must be positive");
  if (static_cast<int>(full.size()) != z * z)
    throw InvalidInput("bridge matrix must have z*z entries");
  for (double v : full)
    if (!(v >= 0)) throw InvalidInput("bridge fractions must be non-negative");
  const BridgeTotals t = bridge_totals(z, full);
  if (t.alpha_lower > 1 || t.alpha_upper > 1)
    throw InvalidInput("bridge vertices exceed the chain length");
  if (t.n_lower < 0 || t.n_upper < 0)
    throw InvalidInput("bridges leave a negative number of chain vertices");
  double rho = entropy(t.alpha_lower) + entropy(t.alpha_upper);
  // alpha_** H(alpha / alpha_**) without dividing by a possibly zero total.
  double mix = plogp(t.alpha_all);
  for (double v : full) mix -= plogp(v);
  rho += mix;
  for (int i = 1; i <= z; ++i)
    for (int j = 1; j <= z; ++j) {
      const double v = full[(i - 1) * z + (j - 1)];
      if (v == 0) continue;
      rho += v * (std::lgamma(i + j - 1.0) - std::lgamma(i) - std::lgamma(j)) / std::log(2.0);
      if (links) rho += v + v / 2 * std::log2(static_cast<double>(i) * j);
    }
  rho += (t.n_lower + t.n_upper) * chain_log2_base;
  return std::exp2(rho / 2);
}

}  // namespace

double entropy(double q) {
  if (!(q >= 0 && q <= 1)) throw InvalidInput("entropy argument outside [0, 1]");
  return -plogp(q) - plogp(1 - q);
}

double gen_entropy(std::span<const double> alpha) {
  double sum = 0, h = 0;
  for (double a : alpha) {
    if (!(a >= 0 && a <= 1)) throw InvalidInput("entropy weights must lie in [0, 1]");
    sum += a;
    h -= plogp(a);
  }
  if (std::abs(sum - 1) > kSimplexSlack) throw InvalidInput("entropy weights must sum to 1");
  return h;
}

std::vector<double> gen_entropy_gradient(std::span<const double> alpha) {
  std::vector<double> g;
  for (double a : alpha) {
    if (!(a > 0)) throw InvalidInput("gradient needs positive weights");
    g.push_back(-std::log2(a) - 1 / std::log(2.0));
  }
  return g;
}

double tri_growth_rate(int k) {
  if (k < 0) throw InvalidInput("reflex chain length must be non-negative");
  return 2 * std::pow(k + 2.0, 1.0 / (k + 1));
}

double tri_lower_objective(int k, std::span<const double> alpha) {
  if (k < 1 || k > 4) throw InvalidInput("triangulation objective covers 1 <= k <= 4");
  if (static_cast<int>(alpha.size()) != k + 1)
    throw InvalidInput("need k+1 reduction fractions alpha_0..alpha_k");
  const auto counts = chain_reduction_counts(k);
  double exponent = 2.0 * (k + 1) + gen_entropy(alpha);
  double product = 0;  // log2 of prod a_i^alpha_i
  for (int i = 0; i <= k; ++i) {
    exponent -= i * alpha[i];
    product += alpha[i] * std::log2(counts[i].convert_to<double>());
  }
  return std::exp2((std::log2(k + 2.0) + exponent + product) / (k + 1));
}

AlphaMatrix::AlphaMatrix(int z) : z_(z) {
  if (z < 1) throw InvalidInput("bridge order z must be positive");
  upper_.assign(upper_size(z), 0.0);
}

AlphaMatrix::AlphaMatrix(int z, std::vector<double> upper) : z_(z), upper_(std::move(upper)) {
  if (z < 1) throw InvalidInput("bridge order z must be positive");
  if (static_cast<int>(upper_.size()) != upper_size(z))
    throw InvalidInput("upper triangle must have z(z+1)/2 entries");
}

int AlphaMatrix::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > z_) throw InvalidInput("bridge index out of range");
  // Rows 1..i-1 hold z, z-1, ... entries.
  return (i - 1) * z_ - (i - 1) * (i - 2) / 2 + (j - i);
}

double AlphaMatrix::at(int i, int j) const { return upper_[index(i, j)]; }
void AlphaMatrix::set(int i, int j, double value) { upper_[index(i, j)] = value; }

std::vector<double> AlphaMatrix::full() const {
  std::vector<double> out(static_cast<std::size_t>(z_) * z_);
  for (int i = 1; i <= z_; ++i)
    for (int j = 1; j <= z_; ++j) out[(i - 1) * z_ + (j - 1)] = at(i, j);
  return out;
}

BridgeTotals bridge_totals(int z, std::span<const double> full) {
  BridgeTotals t;
  for (int i = 1; i <= z; ++i)
    for (int j = 1; j <= z; ++j) {
      const double v = full[(i - 1) * z + (j - 1)];
      t.alpha_all += v;
      t.alpha_lower += i * v;
      t.alpha_upper += j * v;
      t.n_lower -= (2 * i - 1) / 2.0 * v;
      t.n_upper -= (2 * j - 1) / 2.0 * v;
    }
  t.n_lower += 1;
  t.n_upper += 1;
  return t;
}

double st_lower_objective(int z, std::span<const double> full) {
  return bridge_rate(z, full, std::log2(27.0 / 4.0), true);
}

double st_lower_objective(const AlphaMatrix& m) {
  const auto full = m.full();
  return st_lower_objective(m.order(), full);
}

double cf_lower_objective(int z, std::span<const double> full) {
  return bridge_rate(z, full, std::log2(kForestBase), false);
}

double cf_lower_objective(const AlphaMatrix& m) {
  const auto full = m.full();
  return cf_lower_objective(m.order(), full);
}

double sc_upper_rate(double a) {
  if (!(a > 0 && a < 0.5)) throw InvalidInput("split point must lie in (0, 1/2)");
  // The small-k branch increases in beta, so its maximum sits at beta = a.
  return std::max(small_branch(a), max_large_branch(a));
}

ScOptimum minimize_sc_upper_rate(double tol) {
  // rate(a) is the max of an increasing and a non-increasing function of a,
  // flat for small a, so bisect on the crossing instead of a unimodal search.
  double lo = 1e-6, hi = 0.5 - 1e-9;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (small_branch(mid) < max_large_branch(mid)) lo = mid;
    else hi = mid;
  }
  const double a = 0.5 * (lo + hi);
  ScOptimum out;
  out.a = a;
  out.rate = sc_upper_rate(a);
  out.factor = std::exp2(out.rate);
  out.bound = 30 * out.factor;
  out.small_branch = small_branch(a);
  out.large_branch = max_large_branch(a);
  return out;
}

DcUpperBound dc_upper_bound(int check_up_to) {
  DcUpperBound out;
  out.base = 3 * 8.225;
  out.reported = std::ceil(out.base * 100 - 1e-9) / 100;
  out.checked_up_to = check_up_to;
  out.inequality_holds = true;
  for (int m = 1; m <= check_up_to; ++m) {
    BigInt best = 0;
    for (int k = 0; k <= m; ++k) {
      const BigInt c = binomial(m, k);
      best = std::max(best, BigInt(c * c * (BigInt(1) << (2 * k))));
    }
    if (!(best < boost::multiprecision::pow(BigInt(9), m))) out.inequality_holds = false;
  }
  return out;
}

std::string_view to_string(BoundObjective objective) {
  switch (objective) {
    case BoundObjective::kTri: return "tri";
    case BoundObjective::kSt: return "st";
    case BoundObjective::kCf: return "cf";
  }
  return "unknown";
}

BoundObjective parse_bound_objective(std::string_view name) {
  if (name == "tri" || name == "triangulations") return BoundObjective::kTri;
  if (name == "st" || name == "spanning-trees") return BoundObjective::kSt;
  if (name == "cf" || name == "forests" || name == "cycle-free") return BoundObjective::kCf;
  throw InvalidInput("unknown bound objective \"" + std::string(name) + "\"");
}

double evaluate_bound(BoundObjective objective, int order, std::span<const double> params) {
  switch (objective) {
    case BoundObjective::kTri:
      return tri_lower_objective(order, params);
    case BoundObjective::kSt:
      return st_lower_objective(AlphaMatrix(order, {params.begin(), params.end()}));
    case BoundObjective::kCf:
      return cf_lower_objective(AlphaMatrix(order, {params.begin(), params.end()}));
  }
  throw InvalidInput("unknown bound objective");
}

std::optional<std::vector<double>> published_parameters(BoundObjective objective, int order) {
  using V = std::vector<double>;
  switch (objective) {
    case BoundObjective::kTri:
      switch (order) {
        case 1: return V{2.0 / 3.0, 1.0 / 3.0};
        case 2: return V{0.4, 0.4, 0.2};
        case 3: return V{0.23, 0.34, 0.29, 0.14};
        case 4: return V{0.127, 0.254, 0.286, 0.222, 0.111};
      }
      break;
    case BoundObjective::kSt:
      switch (order) {
        case 1: return V{4.0 / (4.0 + 3.0 * std::sqrt(6.0))};
        case 2: return V{0.18, 0.055, 0.032};
        case 3: return V{0.15, 0.043, 0.010, 0.023, 0.0085, 0.0040};
        case 4:
          return V{0.149,   0.0403,  0.00945, 0.00208, 0.0218,
                   0.00767, 0.00226, 0.00359, 0.00132, 0.00058};
        case 8:
          return V{0.144,     0.0389,    0.00908,   0.001994,  0.000422,  0.0000856, 0.0000152,
                   1.76e-6,   0.0209,    0.00733,   0.00214,   0.000569,  0.000140,  0.0000313,
                   5.12e-6,   0.00342,   0.00125,   0.000397,  0.000113,  0.0000290, 5.50e-6,
                   0.000548,  0.000202,  0.0000655, 0.0000181, 3.34e-6,   0.0000845, 0.0000298,
                   8.33e-6,   1.25e-6,   0.0000107, 2.44e-6,   5.10e-7,   1.09e-6,   1.31e-7,
                   6.97e-8};
      }
      break;
    case BoundObjective::kCf:
      switch (order) {
        case 2: return V{0.18, 0.039, 0.021};
        case 3: return V{0.12, 0.031, 0.0080, 0.016, 0.0061, 0.0031};
        case 4:
          return V{0.151,   0.0382,  0.00835, 0.00172, 0.0192,
                   0.00632, 0.00226, 0.00276, 0.00094, 0.00039};
        case 9:
          return V{0.11,     0.028,    0.0069,   0.0017,   0.00042,  0.00010,  0.000024,
                   5.3e-6,   1.2e-6,   0.014,    0.0051,   0.0017,   0.00052,  0.00015,
                   0.000042, 0.000011, 2.7e-6,   0.0025,   0.0010,   0.00038,  0.00013,
                   0.000042, 0.000012, 3.4e-6,   0.00051,  0.00022,  0.000086, 0.000030,
                   0.000010, 3.1e-6,   0.00011,  0.000047, 0.000018, 6.5e-6,   2.2e-6,
                   0.000024, 9.4e-6,   3.7e-6,   1.4e-6,   5.6e-6,   1.8e-6,   7.5e-7,
                   1.5e-6,   3.9e-7,   4.4e-7};
      }
      break;
  }
  return std::nullopt;
}

std::optional<double> published_base(BoundObjective objective, int order) {
  static const double kTri[] = {8.485, 8.617, 8.6504, 8.6485};
  static const double kSt[] = {10.424, 11.611, 11.899, 12.004, 11.952, 11.998, 12.002, 12.002};
  static const double kCf[] = {11.092, 11.944, 12.169, 12.260, 12.251,
                               12.258, 12.260, 12.261, 12.261};
  switch (objective) {
    case BoundObjective::kTri:
      if (order >= 1 && order <= 4) return kTri[order - 1];
      break;
    case BoundObjective::kSt:
      if (order >= 1 && order <= 8) return kSt[order - 1];
      break;
    case BoundObjective::kCf:
      if (order >= 1 && order <= 9) return kCf[order - 1];
      break;
  }
  return std::nullopt;
}

}  // namespace multiplicity
