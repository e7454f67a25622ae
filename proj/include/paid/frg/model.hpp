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

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace paid::frg {

using Momentum = std::array<double, 2>;

/// t-t' Hubbard model on the square lattice.
struct ModelParams {
  double t = 1.0;        // nearest-neighbor hopping, sets the energy scale
  double t_prime = 0.0;  // next-nearest-neighbor hopping
  double mu = 0.0;       // chemical potential
};

inline void require_valid(const ModelParams& params) {
  if (params.t == 0.0) {
    throw std::invalid_argument("hopping t must be nonzero");
  }
}

/// Tight-binding dispersion
///   eps(k) = -2 t (cos kx + cos ky) - 4 t' cos kx cos ky - mu.
inline double dispersion(const Momentum& k, const ModelParams& params) {
  const double cx = std::cos(k[0]);
  const double cy = std::cos(k[1]);
  return -2.0 * params.t * (cx + cy) - 4.0 * params.t_prime * cx * cy - params.mu;
}

/// Soft frequency cutoff theta(k0) = k0^2 / (k0^2 + Omega^2), in [0, 1).
inline double regulator(double k0, double omega) {
  const double k2 = k0 * k0;
  return k2 / (k2 + omega * omega);
}

/// Regulated free propagator G(k0, k) = theta(k0) / (i k0 - eps(k)).
/// At k0 = 0 the regulator vanishes and G is exactly zero.
inline std::complex<double> propagator(double k0, const Momentum& k,
                                       const ModelParams& params, double omega) {
  if (k0 == 0.0) return {0.0, 0.0};
  const double theta = regulator(k0, omega);
  return theta / std::complex<double>(-dispersion(k, params), k0);
}

}  // namespace paid::frg
