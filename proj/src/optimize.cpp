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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "multiplicity/bound_lab.hpp"
#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

constexpr double kPenalty = 1e3;

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(const std::vector<double>& x) {
  std::vector<double> u(x);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0, theta = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    const double t = (cum - 1) / static_cast<double>(i + 1);
    if (u[i] - t > 0) theta = t;
  }
  std::vector<double> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = std::max(0.0, x[i] - theta);
  return p;
}

class Problem {
 public:
  Problem(BoundObjective objective, int order) : objective_(objective), order_(order) {
    if (objective == BoundObjective::kTri && (order < 1 || order > 4))
      throw InvalidInput("tri order must be in 1..4");
    if (objective != BoundObjective::kTri && (order < 1 || order > 12))
      throw InvalidInput("bridge order must be in 1..12");
  }

  // Feasible point closest to x.
  std::vector<double> feasible(const std::vector<double>& x) const {
    if (objective_ == BoundObjective::kTri) return project_simplex(x);
    std::vector<double> y(x);
    for (double& v : y) v = std::max(0.0, v);
    return y;
  }

  // Objective to maximize; infeasible points get a value below any feasible one.
  double value(const std::vector<double>& x) const {
    const auto y = feasible(x);
    double dist = 0;
    for (std::size_t i = 0; i < x.size(); ++i) dist += (x[i] - y[i]) * (x[i] - y[i]);
    if (objective_ != BoundObjective::kTri) {
      const auto full = AlphaMatrix(order_, y).full();
      const auto t = bridge_totals(order_, full);
      const double violation = std::max(0.0, t.alpha_lower - 1) + std::max(0.0, t.alpha_upper - 1) +
                               std::max(0.0, -t.n_lower) + std::max(0.0, -t.n_upper);
      if (violation > 0) return -kPenalty * (1 + violation + dist);
    }
    return evaluate_bound(objective_, order_, y) - kPenalty * dist;
  }

 private:
  BoundObjective objective_;
  int order_;
};

struct Run {
  std::vector<double> x;
  double f = 0;
  long long iterations = 0;
  bool converged = false;
};

// Nelder-Mead (maximizing) with dimension-adapted coefficients.
Run nelder_mead(const Problem& p, std::vector<double> start, double tol, int max_iterations) {
  const int d = static_cast<int>(start.size());
  const double alpha = 1, beta = 1 + 2.0 / d, gamma = 0.75 - 0.5 / d, delta = 1 - 1.0 / d;
  std::vector<std::vector<double>> s(d + 1, start);
  for (int i = 0; i < d; ++i) {
    const double h = start[i] != 0 ? 0.1 * std::abs(start[i]) : 1e-4;
    s[i + 1][i] += h;
  }
  std::vector<double> f(d + 1);
  for (int i = 0; i <= d; ++i) f[i] = p.value(s[i]);
  std::vector<int> order(d + 1);
  Run run;
  auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };
  for (; run.iterations < max_iterations; ++run.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] > f[b]; });
    const int best = order.front(), worst = order.back(), second = order[d - 1];
    if (std::abs(f[best] - f[worst]) <= tol * (std::abs(f[best]) + tol)) {
      run.converged = true;
      break;
    }
    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i <= d; ++i)
      if (i != worst)
        for (int j = 0; j < d; ++j) centroid[j] += s[i][j] / d;
    const auto xr = blend(centroid, s[worst], -alpha);
    const double fr = p.value(xr);
    if (fr > f[best]) {
      const auto xe = blend(centroid, s[worst], -alpha * beta);
      const double fe = p.value(xe);
      if (fe > fr) s[worst] = xe, f[worst] = fe;
      else s[worst] = xr, f[worst] = fr;
    } else if (fr > f[second]) {
      s[worst] = xr, f[worst] = fr;
    } else {
      const bool outside = fr > f[worst];
      const auto xc = blend(centroid, outside ? xr : s[worst], gamma);
      const double fc = p.value(xc);
      if (fc > std::max(fr, f[worst]) || (!outside && fc > f[worst])) {
        s[worst] = xc, f[worst] = fc;
      } else {
        for (int i = 0; i <= d; ++i) {
          if (i == best) continue;
          s[i] = blend(s[best], s[i], delta);
          f[i] = p.value(s[i]);
        }
      }
    }
  }
  const int best = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
  run.x = s[best];
  run.f = f[best];
  return run;
}

// Pattern search along coordinates; tri moves mass between pairs of coordinates.
void refine(const Problem& p, Run& run, bool simplex, double tol) {
  run.x = p.feasible(run.x);
  run.f = p.value(run.x);
  const int d = static_cast<int>(run.x.size());
  for (double h = 1e-3; h > std::max(tol, 1e-14); h /= 2) {
    bool moved = true;
    while (moved) {
      moved = false;
      ++run.iterations;
      for (int i = 0; i < d; ++i) {
        for (int j = simplex ? 0 : i; j < (simplex ? d : i + 1); ++j) {
          if (simplex && j == i) continue;
          for (double sign : {1.0, -1.0}) {
            auto y = run.x;
            const double step = h * std::max(1e-6, std::abs(y[i]));
            y[i] += sign * step;
            if (simplex) y[j] -= sign * step;
            if (y[i] < 0 || (simplex && y[j] < 0)) continue;
            const double fy = p.value(y);
            if (fy > run.f) {
              run.x = y;
              run.f = fy;
              moved = true;
            }
          }
        }
      }
    }
  }
}

std::vector<double> padded_start(BoundObjective objective, int order) {
  for (int lower = order; lower >= 1; --lower) {
    const auto table = published_parameters(objective, lower);
    if (!table) continue;
    AlphaMatrix small(lower, *table), big(order);
    for (int i = 1; i <= std::min(lower, order); ++i)
      for (int j = i; j <= std::min(lower, order); ++j) big.set(i, j, small.at(i, j));
    return big.upper();
  }
  return std::vector<double>(AlphaMatrix::upper_size(order), 0.0);
}

std::vector<double> random_start(BoundObjective objective, int order, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (objective == BoundObjective::kTri) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> x(order + 1);
    double sum = 0;
    for (double& v : x) sum += (v = e(rng));
    for (double& v : x) v /= sum;
    return x;
  }
  // Bridge fractions decay roughly geometrically in the bridge size.
  AlphaMatrix m(order);
  for (int i = 1; i <= order; ++i)
    for (int j = i; j <= order; ++j)
      m.set(i, j, 0.3 * u(rng) * std::pow(0.25, i + j - 2) * (i == j ? 1.0 : 0.5));
  return m.upper();
}

}  // namespace

BoundReport optimize(BoundObjective objective, int order, const OptimizeOptions& options) {
  if (options.restarts < 0) throw InvalidInput("restarts must be non-negative");
  if (!(options.tol > 0)) throw InvalidInput("tolerance must be positive");
  if (options.max_iterations < 1) throw InvalidInput("max_iterations must be positive");
  if (options.workers < 1) throw InvalidInput("workers must be positive");
  const Problem problem(objective, order);
  const bool simplex = objective == BoundObjective::kTri;

  BoundReport report;
  report.objective = std::string(to_string(objective));
  report.order = order;
  report.restarts = options.restarts;
  report.tol = options.tol;
  report.seed = options.seed;

  std::vector<std::vector<double>> starts;
  if (auto table = published_parameters(objective, order)) {
    report.published_start = evaluate_bound(objective, order, *table);
    starts.push_back(std::move(*table));
  } else if (!simplex) {
    starts.push_back(padded_start(objective, order));
  } else {
    starts.emplace_back(order + 1, 1.0 / (order + 1));
  }
  std::mt19937_64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) starts.push_back(random_start(objective, order, rng));

  std::vector<Run> runs(starts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < starts.size();) {
      runs[i] = nelder_mead(problem, starts[i], options.tol, options.max_iterations);
      refine(problem, runs[i], simplex, options.tol);
    }
  };
  const int threads = std::clamp(options.workers, 1, static_cast<int>(starts.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  // First strictly best run wins, so the choice is independent of scheduling.
  Run best;
  best.f = -std::numeric_limits<double>::infinity();
  for (auto& run : runs) {
    report.iterations += run.iterations;
    if (run.f > best.f) best = std::move(run);
  }
  report.params = problem.feasible(best.x);
  report.base = evaluate_bound(objective, order, report.params);
  report.converged = best.converged;
  return report;
}

}  // namespace multiplicity
