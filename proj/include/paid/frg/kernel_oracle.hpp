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
#include <complex>
#include <string>

#include "paid/errors.hpp"
#include "paid/frg/kernels.hpp"
#include "paid/rules.hpp"

namespace paid::frg {

/// Brute-force check value for the analytic kernels: integrates the
/// frequency integrand numerically after the substitution p0 = Omega tan(u),
/// u in (-pi/2, pi/2), with Clenshaw-Curtis rules of doubling density until
/// two successive levels agree within tol (mixed: relative above magnitude
/// one, absolute below). Independent of the residue-calculus code path.
inline double kernel_oracle(Channel channel, const KernelArgs& args, double tol) {
  detail::require_kernel_args(args);
  if (tol < 1e-12) {
    throw std::invalid_argument("kernel_oracle: tol must be >= 1e-12");
  }

  const double omega = args.omega;
  const auto integrand = [&](double p0) -> std::complex<double> {
    const double p2 = p0 * p0;
    const double denom_reg = p2 + omega * omega;
    const double numer = -4.0 * omega * p2 * p2 /
                         (denom_reg * denom_reg * denom_reg);
    const std::complex<double> g1(-args.e1, p0);  // i p0 - e1
    const std::complex<double> g2 = channel == Channel::pp
                                        ? std::complex<double>(-args.e2, -p0)
                                        : std::complex<double>(-args.e2, p0);
    return numer / (g1 * g2);
  };

  std::complex<double> prev;
  bool have_prev = false;
  for (int n = 64; n <= 16384; n *= 2) {
    const Rule1D& rule = make_rule(n + 1);
    std::complex<double> total{0.0, 0.0};
    // Endpoint nodes map to |p0| -> infinity where the transformed
    // integrand vanishes; skip them by index.
    for (int j = 1; j < n; ++j) {
      const double u = 0.5 * M_PI * rule.nodes[j];
      const double t = std::tan(u);
      const std::complex<double> g = integrand(omega * t) * omega * (1.0 + t * t);
      total += rule.weights[j] * g;
    }
    total *= 0.5 * M_PI;
    if (have_prev &&
        std::abs(total - prev) <= tol * std::max(1.0, std::abs(total))) {
      if (std::abs(total.imag()) > tol * std::max(1.0, std::abs(total.real()))) {
        throw OracleError("kernel_oracle: imaginary part failed to cancel: " +
                          std::to_string(total.imag()));
      }
      return total.real();
    }
    prev = total;
    have_prev = true;
  }
  throw OracleError("kernel_oracle: no convergence within refinement budget");
}

}  // namespace paid::frg
