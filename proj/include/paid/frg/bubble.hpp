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
#include <string>

#include "paid/family.hpp"
#include "paid/frg/form_factors.hpp"
#include "paid/frg/kernels.hpp"
#include "paid/frg/model.hpp"
#include "paid/geometry.hpp"

namespace paid::frg {

/// Physics parameters generating one family of bubble integrands: the
/// scale derivative of the particle-particle or particle-hole bubble at a
/// fixed transfer momentum, expanded in a form-factor basis.
struct BubbleSpec {
  Channel channel = Channel::pp;
  Momentum l = {0.0, 0.0};  // transfer momentum, components in [-pi, pi]
  double omega = 1.0;       // scale
  ModelParams params;
  FormFactorBasis basis = FormFactorBasis::make(9);
};

inline void require_valid(const BubbleSpec& spec) {
  require_valid(spec.params);
  if (!(spec.omega > 0.0) || !std::isfinite(spec.omega)) {
    throw std::invalid_argument("bubble spec: omega must be positive and finite");
  }
  if (!std::isfinite(spec.l[0]) || !std::isfinite(spec.l[1])) {
    throw std::invalid_argument("bubble spec: transfer momentum must be finite");
  }
}

/// The momentum-space integrand of one (m, n) member at momentum p.
inline double bubble_integrand(const BubbleSpec& spec, int m, int n, double px,
                               double py) {
  Momentum k1, k2;
  if (spec.channel == Channel::pp) {
    k1 = {0.5 * spec.l[0] + px, 0.5 * spec.l[1] + py};
    k2 = {0.5 * spec.l[0] - px, 0.5 * spec.l[1] - py};
  } else {
    k1 = {px + 0.5 * spec.l[0], py + 0.5 * spec.l[1]};
    k2 = {px - 0.5 * spec.l[0], py - 0.5 * spec.l[1]};
  }
  const KernelArgs args{spec.omega, dispersion(k1, spec.params),
                        dispersion(k2, spec.params)};
  // Grouping the form factors first keeps (m,n) and (n,m) bitwise equal.
  return kernel(spec.channel, args) *
         (spec.basis(m, px, py) * spec.basis(n, px, py));
}

/// One member per unordered form-factor pair (m, n), m <= n, over the
/// Brillouin zone: size 9 gives 45 members, size 25 gives 325.
inline IntegrandFamily build_family(const BubbleSpec& spec) {
  require_valid(spec);
  IntegrandFamily family;
  family.domain = Rectangle{-M_PI, M_PI, -M_PI, M_PI};
  const int nf = spec.basis.size();
  family.members.reserve(nf * (nf + 1) / 2);
  for (int m = 0; m < nf; ++m) {
    for (int n = m; n < nf; ++n) {
      family.add(
          [spec, m, n](double px, double py) {
            return bubble_integrand(spec, m, n, px, py);
          },
          "(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  return family;
}

}  // namespace paid::frg
