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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paid/driver.hpp"
#include "paid/family.hpp"
#include "paid/frg/bubble.hpp"
#include "paid/frg/kernel_oracle.hpp"
#include "paid/frg/kernels.hpp"
#include "paid/rules.hpp"

namespace paid::verify {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  double worst = 0.0;  // largest deviation seen, in units of its tolerance
  std::string detail;  // first failure, empty when clean

  bool passed() const { return failures == 0; }
};

namespace detail {

inline void record(SuiteResult& suite, bool ok, double severity,
                   const std::string& what) {
  ++suite.checks;
  suite.worst = std::max(suite.worst, severity);
  if (!ok) {
    ++suite.failures;
    if (suite.detail.empty()) suite.detail = what;
  }
}

/// Random bivariate polynomial with per-axis degree <= deg and its exact
/// integral over a rectangle (monomial antiderivatives).
struct Poly2D {
  int deg = 0;
  std::vector<double> coeff;  // (deg+1)^2, row-major in x-degree

  double operator()(double x, double y) const {
    double vx = 0.0;
    for (int i = deg; i >= 0; --i) {
      double vy = 0.0;
      for (int j = deg; j >= 0; --j) {
        vy = vy * y + coeff[i * (deg + 1) + j];
      }
      vx = vx * x + vy;
    }
    return vx;
  }

  double exact_integral(const Rectangle& r) const {
    auto mono = [](double lo, double hi, int d) {
      return (std::pow(hi, d + 1) - std::pow(lo, d + 1)) / (d + 1);
    };
    double total = 0.0;
    for (int i = 0; i <= deg; ++i) {
      for (int j = 0; j <= deg; ++j) {
        total += coeff[i * (deg + 1) + j] * mono(r.x_lo, r.x_hi, i) *
                 mono(r.y_lo, r.y_hi, j);
      }
    }
    return total;
  }
};

/// L1 quadrature mass of |f| under the fine rule: the natural amplitude a
/// pair error should be compared against (CC weights are positive).
template <typename F>
double fine_l1_mass(F&& f, const Rectangle& rect, const QuadPairRule& pair) {
  const Rule1D& fine = *pair.fine;
  const double cx = 0.5 * (rect.x_lo + rect.x_hi);
  const double hx = 0.5 * (rect.x_hi - rect.x_lo);
  const double cy = 0.5 * (rect.y_lo + rect.y_hi);
  const double hy = 0.5 * (rect.y_hi - rect.y_lo);
  double total = 0.0;
  for (int i = 0; i < fine.point_count; ++i) {
    for (int j = 0; j < fine.point_count; ++j) {
      total += fine.weights[i] * fine.weights[j] *
               std::abs(f(cx + hx * fine.nodes[i], cy + hy * fine.nodes[j]));
    }
  }
  return total * hx * hy;
}

}  // namespace detail

/// Sum of fine-rule values over a uniform 2^depth x 2^depth subdivision:
/// the brute-force reference the adaptive driver is held against.
template <typename F>
double uniform_reference(F&& f, const Rectangle& rect, const QuadPairRule& pair,
                         int depth) {
  const int cells = 1 << depth;
  const double dx = rect.width() / cells;
  const double dy = rect.height() / cells;
  double total = 0.0;
  for (int i = 0; i < cells; ++i) {
    for (int j = 0; j < cells; ++j) {
      const Rectangle cell{rect.x_lo + i * dx, rect.x_lo + (i + 1) * dx,
                           rect.y_lo + j * dy, rect.y_lo + (j + 1) * dy};
      total += integrate_pair(f, cell, pair).q_fine;
    }
  }
  return total;
}

/// Pair-rule exactness on random polynomials of per-axis degree <= N over
/// random rectangles, for N in {2, 4, 6}.
inline SuiteResult suite_quadrature_exactness(std::uint64_t seed = 20260810,
                                              int cases_per_order = 200) {
  SuiteResult suite;
  suite.name = "quadrature-exactness";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> center(-3.0, 3.0);
  std::uniform_real_distribution<double> half(0.1, 2.0);

  for (int order : {2, 4, 6}) {
    const QuadPairRule pair = make_pair(order);
    for (int c = 0; c < cases_per_order; ++c) {
      detail::Poly2D poly;
      poly.deg = order;
      poly.coeff.resize((order + 1) * (order + 1));
      for (double& v : poly.coeff) v = coeff(rng);

      const double cx = center(rng), cy = center(rng);
      const double hx = half(rng), hy = half(rng);
      const Rectangle rect{cx - hx, cx + hx, cy - hy, cy + hy};

      const PairResult r = integrate_pair(poly, rect, pair);
      const double mass = detail::fine_l1_mass(poly, rect, pair);
      const double scale = std::max(std::abs(r.q_fine), 1e-3 * mass);
      const double exact = poly.exact_integral(rect);

      const double pair_rel = r.err / scale;
      const double value_rel = std::abs(r.q_fine - exact) / scale;
      std::ostringstream what;
      what << "order " << order << " case " << c << ": pair err " << pair_rel
           << ", value err " << value_rel;
      detail::record(suite, pair_rel <= 1e-12 && value_rel <= 1e-12,
                     std::max(pair_rel, value_rel) / 1e-12, what.str());
    }
  }
  return suite;
}

/// Closed-form kernels against the quadrature oracle: random sweep plus
/// forced pole-coalescence cases plus the analytic spot value.
inline SuiteResult suite_kernel_vs_oracle(std::uint64_t seed = 20260810,
                                          int random_cases = 1000,
                                          int coalescent_cases = 50) {
  SuiteResult suite;
  suite.name = "kernel-vs-oracle";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_omega(std::log(1e-3), std::log(10.0));
  std::uniform_real_distribution<double> energy(-4.5, 4.5);
  std::uniform_real_distribution<double> jitter(-1e-9, 1e-9);
  const double tol = 1e-8;

  auto check = [&](frg::Channel channel, const frg::KernelArgs& args,
                   const char* tag) {
    const double analytic = frg::kernel(channel, args);
    const double reference = frg::kernel_oracle(channel, args, 1e-10);
    const double dev =
        std::abs(analytic - reference) / std::max(1.0, std::abs(reference));
    std::ostringstream what;
    what << tag << " omega=" << args.omega << " e1=" << args.e1
         << " e2=" << args.e2 << ": mixed dev " << dev;
    detail::record(suite, dev <= tol, dev / tol, what.str());
  };

  for (int c = 0; c < random_cases - coalescent_cases; ++c) {
    const frg::KernelArgs args{std::exp(log_omega(rng)), energy(rng), energy(rng)};
    check(frg::Channel::pp, args, "pp");
    check(frg::Channel::ph, args, "ph");
  }
  for (int c = 0; c < coalescent_cases; ++c) {
    const double omega = std::exp(log_omega(rng));
    const double e = energy(rng);
    if (c % 2 == 0) {
      check(frg::Channel::ph, {omega, e, e + jitter(rng)}, "ph-coalesced");
    } else {
      check(frg::Channel::pp, {omega, e, -e}, "pp-coalesced");
    }
  }

  const double spot = frg::kernel_pp({1.0, 0.0, 0.0});
  const double spot_dev = std::abs(spot - (-M_PI / 2.0));
  detail::record(suite, spot_dev <= 1e-9, spot_dev / 1e-9,
                 "spot kernel_pp(1,0,0) deviates by " + std::to_string(spot_dev));
  return suite;
}

/// Form-factor Gram matrix on a dense midpoint grid: identity to 1e-10.
inline SuiteResult suite_orthonormality(int grid = 256) {
  SuiteResult suite;
  suite.name = "form-factor-orthonormality";
  for (int size : {9, 25}) {
    const auto basis = frg::FormFactorBasis::make(size);
    std::vector<double> gram(size * size, 0.0);
    std::vector<double> values(size);
    const double step = 2.0 * M_PI / grid;
    for (int i = 0; i < grid; ++i) {
      const double px = -M_PI + (i + 0.5) * step;
      for (int j = 0; j < grid; ++j) {
        const double py = -M_PI + (j + 0.5) * step;
        for (int m = 0; m < size; ++m) values[m] = basis(m, px, py);
        for (int m = 0; m < size; ++m) {
          for (int n = m; n < size; ++n) {
            gram[m * size + n] += values[m] * values[n];
          }
        }
      }
    }
    for (int m = 0; m < size; ++m) {
      for (int n = m; n < size; ++n) {
        const double entry = gram[m * size + n] * step * step;
        const double dev = std::abs(entry - (m == n ? 1.0 : 0.0));
        std::ostringstream what;
        what << "basis " << size << " pair (" << m << "," << n
             << ") deviates by " << dev;
        detail::record(suite, dev <= 1e-10, dev / 1e-10, what.str());
      }
    }
  }
  return suite;
}

/// The mixed corpus the driver is checked against: constants, polynomials,
/// product Runge, an off-center Gaussian, and two bubble members of very
/// different sharpness, all over the Brillouin zone square.
inline IntegrandFamily mixed_corpus() {
  IntegrandFamily family;
  family.domain = Rectangle{-M_PI, M_PI, -M_PI, M_PI};
  family.add([](double, double) { return 1.0; }, "constant");
  family.add([](double x, double y) { return x * x * y * y; }, "poly-x2y2");
  family.add(
      [](double x, double y) {
        return 1.0 / ((1.0 + 25.0 * x * x) * (1.0 + 25.0 * y * y));
      },
      "runge-product");
  family.add(
      [](double x, double y) {
        const double dx = x - 0.3;
        return std::exp(-50.0 * (dx * dx + y * y));
      },
      "gaussian");
  for (const double omega : {0.5, 0.05}) {
    frg::BubbleSpec spec;
    spec.channel = frg::Channel::pp;
    spec.l = {1.57, 1.31};
    spec.omega = omega;
    family.add(
        [spec](double px, double py) {
          return frg::bubble_integrand(spec, 0, 0, px, py);
        },
        "pp-omega-" + std::to_string(omega));
  }
  return family;
}

/// Adaptive driver against the depth-8 uniform-refinement reference on the
/// mixed corpus at a tight absolute target.
inline SuiteResult suite_driver_vs_reference(int workers = 2) {
  SuiteResult suite;
  suite.name = "driver-vs-reference";
  const IntegrandFamily family = mixed_corpus();

  AdaptiveConfig config;
  config.epsilon = 1e-8;
  config.epsilon_mode = EpsilonMode::absolute;
  config.rule_order = 8;
  config.max_task = 8;
  config.workers = workers;
  const FamilyResult result = run_adaptive(family, config);

  const QuadPairRule pair = make_pair(config.rule_order);
  for (std::size_t m = 0; m < family.size(); ++m) {
    const double ref = uniform_reference(family.members[m], family.domain, pair, 8);
    const double tol = std::max(10.0 * config.epsilon, 1e-9 * std::abs(ref));
    const double dev = std::abs(result.values[m] - ref);
    std::ostringstream what;
    what << family.labels[m] << ": adaptive " << result.values[m]
         << " vs reference " << ref << " (dev " << dev << ", tol " << tol << ")";
    detail::record(suite, dev <= tol && result.converged, dev / tol, what.str());
  }
  return suite;
}

inline std::vector<SuiteResult> run_all_suites() {
  return {suite_quadrature_exactness(), suite_kernel_vs_oracle(),
          suite_orthonormality(), suite_driver_vs_reference()};
}

}  // namespace paid::verify
