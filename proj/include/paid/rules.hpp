/*
 * Copyright 2026 The PAID Development Team
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "paid/errors.hpp"
#include "paid/geometry.hpp"

namespace paid {

/// One-dimensional Clenshaw-Curtis rule on [-1, 1].
///
/// Nodes are the Chebyshev extreme points cos(j*pi/(point_count-1)),
/// descending from +1 to -1. Doubling the panel count nests the node set:
/// node j of an m-panel rule equals node 2j of the 2m-panel rule, which is
/// what makes the coarse/fine error estimate below almost free.
struct Rule1D {
  int point_count = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

inline Rule1D build_rule(int point_count) {
  const int n = point_count - 1;  // panel count
  Rule1D rule;
  rule.point_count = point_count;
  rule.nodes.resize(point_count);
  rule.weights.resize(point_count);
  for (int j = 0; j <= n; ++j) {
    rule.nodes[j] = std::cos(j * M_PI / n);
  }
  // Classic cosine-sum weights: exact integrals of the interpolating
  // trigonometric polynomial. O(n^2), computed once per point count.
  for (int j = 0; j <= n; ++j) {
    double s = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      s += b / (4.0 * k * k - 1.0) * std::cos(2.0 * k * j * M_PI / n);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    rule.weights[j] = c / n * (1.0 - s);
  }
  return rule;
}

}  // namespace detail

/// Returns the Clenshaw-Curtis rule with the given number of points.
/// Rules are built once, cached, and immutable afterwards, so the returned
/// reference stays valid for the lifetime of the process and may be shared
/// freely across threads.
inline const Rule1D& make_rule(int point_count) {
  if (point_count < 2) {
    throw std::invalid_argument("make_rule: point_count must be >= 2");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule1D>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[point_count];
  if (!slot) {
    slot = std::make_unique<Rule1D>(detail::build_rule(point_count));
  }
  return *slot;
}

/// Nested rule pair: an N-panel rule embedded in a 2N-panel rule.
/// A tensor evaluation of the fine grid serves both rules; coarse nodes are
/// the even-indexed fine nodes (index arithmetic, never float comparison).
struct QuadPairRule {
  int n = 0;  // coarse panel count
  const Rule1D* coarse = nullptr;
  const Rule1D* fine = nullptr;

  int fine_points() const { return 2 * n + 1; }
  /// Distinct 2D evaluations needed per rectangle.
  std::int64_t evals_per_rect() const {
    return static_cast<std::int64_t>(fine_points()) * fine_points();
  }
};

inline QuadPairRule make_pair(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("make_pair: rule order must be even and >= 2");
  }
  QuadPairRule pair;
  pair.n = n;
  pair.coarse = &make_rule(n + 1);
  pair.fine = &make_rule(2 * n + 1);
  return pair;
}

/// Result of one coarse/fine evaluation over a rectangle.
struct PairResult {
  double q_coarse = 0.0;
  double q_fine = 0.0;
  double err = 0.0;  // |q_coarse - q_fine|
  std::int64_t eval_count = 0;
};

/// Tensor-product evaluation of both rules of the pair over `rect`.
/// The integrand is called exactly once per distinct fine-grid point;
/// a non-finite return aborts with the offending point.
template <typename F>
PairResult integrate_pair(F&& f, const Rectangle& rect, const QuadPairRule& pair,
                          std::ptrdiff_t member = EvaluationError::kNoMember) {
  const Rule1D& fine = *pair.fine;
  const Rule1D& coarse = *pair.coarse;
  const int m = fine.point_count;

  const double cx = 0.5 * (rect.x_lo + rect.x_hi);
  const double hx = 0.5 * (rect.x_hi - rect.x_lo);
  const double cy = 0.5 * (rect.y_lo + rect.y_hi);
  const double hy = 0.5 * (rect.y_hi - rect.y_lo);

  double q_fine = 0.0;
  double q_coarse = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = cx + hx * fine.nodes[i];
    double row_fine = 0.0;
    double row_coarse = 0.0;
    const bool on_coarse_row = (i % 2 == 0);
    for (int j = 0; j < m; ++j) {
      const double y = cy + hy * fine.nodes[j];
      const double v = f(x, y);
      if (!std::isfinite(v)) {
        throw EvaluationError(x, y, member);
      }
      row_fine += fine.weights[j] * v;
      if (on_coarse_row && j % 2 == 0) {
        row_coarse += coarse.weights[j / 2] * v;
      }
    }
    q_fine += fine.weights[i] * row_fine;
    if (on_coarse_row) {
      q_coarse += coarse.weights[i / 2] * row_coarse;
    }
  }

  const double jac = hx * hy;  // area / 4
  PairResult out;
  out.q_fine = jac * q_fine;
  out.q_coarse = jac * q_coarse;
  out.err = std::abs(out.q_coarse - out.q_fine);
  out.eval_count = pair.evals_per_rect();
  return out;
}

}  // namespace paid
