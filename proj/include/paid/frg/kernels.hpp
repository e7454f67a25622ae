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
#include <stdexcept>

namespace paid::frg {

/// Arguments of the frequency-integrated two-propagator kernels: the scale
/// and the dispersion values at the two internal momenta.
struct KernelArgs {
  double omega = 1.0;
  double e1 = 0.0;
  double e2 = 0.0;
};

enum class Channel { pp, ph };

namespace detail {

// The scale derivative of the squared regulator,
//   d/dOmega theta(p0)^2 = -4 Omega p0^4 / (p0^2 + Omega^2)^3,
// turns both frequency integrals into contour integrals of a rational
// function. Residue calculus collapses them onto one real special function
//
//   K(c) = int dp0 p0^4 / ((p0^2 + Omega^2)^3 (p0^2 + c^2))
//        = -pi * h[W, W, W, C],   h(x) = x^(3/2), W = Omega^2, C = c^2,
//
// where h[...] is a divided difference with a triple node at W. With the
// odd function j(c) = c K(c), both kernels are first divided differences
// of j, which keeps every coalescence limit (e1 -> -e2, e1 -> e2,
// |e| -> Omega) a smooth limit of one formula instead of a special case:
//
//   kernel_pp = -4 Omega (j(e1) + j(e2)) / (e1 + e2)
//   kernel_ph = +4 Omega (j(e2) - j(e1)) / (e2 - e1)
//
// The divided differences of h are evaluated by direct recursion away from
// C = W and by a Taylor series around the triple node inside a window where
// the recursion would cancel catastrophically.

inline constexpr double kSeriesWindow = 0.12;   // |C - W| < window * W
inline constexpr double kCoalescenceTol = 1e-7;  // pole-separation switch

/// h[W, W, W, C] for h(x) = x^(3/2), W > 0, C >= 0.
inline double h32_dd3(double w, double c2) {
  const double u = c2 - w;
  const double sqrt_w = std::sqrt(w);
  if (std::abs(u) < kSeriesWindow * w) {
    // Taylor around the triple node: sum_k h^(3+k)(W) u^k / (k+3)!,
    // with h^(n)(W) = W^(3/2-n) prod_{i<n} (3/2 - i).
    const double r = u / w;
    double deriv = -0.375;            // prod_{i<3} (3/2 - i)
    double scale = 1.0 / (w * sqrt_w);  // W^(-3/2)
    double fact = 6.0;                // (k+3)!
    double r_pow = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 30; ++k) {
      const double term = deriv * scale * r_pow / fact;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      deriv *= (1.5 - (3 + k));
      fact *= (k + 4);
      r_pow *= r;
    }
    return sum;
  }
  const double h_wc = (c2 * std::sqrt(c2) - w * sqrt_w) / u;
  const double h_wwc = (h_wc - 1.5 * sqrt_w) / u;
  return (h_wwc - 0.375 / sqrt_w) / u;
}

/// h[W, W, W, C, C] for h(x) = x^(3/2).
inline double h32_dd4(double w, double c2) {
  const double u = c2 - w;
  const double sqrt_w = std::sqrt(w);
  if (std::abs(u) < kSeriesWindow * w) {
    // sum_k h^(4+k)(W) u^k (k+1) / (k+4)!
    const double r = u / w;
    double deriv = 0.5625;                  // prod_{i<4} (3/2 - i)
    double scale = 1.0 / (w * w * sqrt_w);  // W^(-5/2)
    double fact = 24.0;                     // (k+4)!
    double r_pow = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 30; ++k) {
      const double term = deriv * scale * r_pow * (k + 1) / fact;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      deriv *= (1.5 - (4 + k));
      fact *= (k + 5);
      r_pow *= r;
    }
    return sum;
  }
  const double h_wc = (c2 * std::sqrt(c2) - w * sqrt_w) / u;
  const double h_wwc = (h_wc - 1.5 * sqrt_w) / u;
  const double h_wwwc = (h_wwc - 0.375 / sqrt_w) / u;
  const double h_wcc = (1.5 * std::sqrt(c2) - h_wc) / u;
  const double h_wwcc = (h_wcc - h_wwc) / u;
  return (h_wwcc - h_wwwc) / u;
}

inline double kfun(double omega, double c) {
  return -M_PI * h32_dd3(omega * omega, c * c);
}

inline double jfun(double omega, double c) { return c * kfun(omega, c); }

inline double jfun_prime(double omega, double c) {
  return kfun(omega, c) -
         2.0 * M_PI * c * c * h32_dd4(omega * omega, c * c);
}

inline void require_kernel_args(const KernelArgs& args) {
  if (!(args.omega > 0.0) || !std::isfinite(args.omega)) {
    throw std::invalid_argument("kernel: omega must be positive and finite");
  }
  if (!std::isfinite(args.e1) || !std::isfinite(args.e2)) {
    throw std::invalid_argument("kernel: dispersion arguments must be finite");
  }
}

}  // namespace detail

/// Scale derivative of the frequency-integrated particle-particle bubble,
///   d/dOmega int dp0 theta(p0)^2 / [(i p0 - e1)(-i p0 - e2)].
/// Symmetric in (e1, e2); always finite and real.
inline double kernel_pp(const KernelArgs& args) {
  detail::require_kernel_args(args);
  const double sum = args.e1 + args.e2;
  if (std::abs(sum) < detail::kCoalescenceTol) {
    return -4.0 * args.omega *
           detail::jfun_prime(args.omega, 0.5 * (args.e1 - args.e2));
  }
  return -4.0 * args.omega *
         (detail::jfun(args.omega, args.e1) + detail::jfun(args.omega, args.e2)) /
         sum;
}

/// Scale derivative of the frequency-integrated particle-hole bubble,
///   d/dOmega int dp0 theta(p0)^2 / [(i p0 - e1)(i p0 - e2)].
/// Symmetric in (e1, e2); the e1 = e2 double pole is a smooth limit.
inline double kernel_ph(const KernelArgs& args) {
  detail::require_kernel_args(args);
  const double diff = args.e2 - args.e1;
  if (std::abs(diff) < detail::kCoalescenceTol) {
    return 4.0 * args.omega *
           detail::jfun_prime(args.omega, 0.5 * (args.e1 + args.e2));
  }
  return 4.0 * args.omega *
         (detail::jfun(args.omega, args.e2) - detail::jfun(args.omega, args.e1)) /
         diff;
}

inline double kernel(Channel channel, const KernelArgs& args) {
  return channel == Channel::pp ? kernel_pp(args) : kernel_ph(args);
}

}  // namespace paid::frg
