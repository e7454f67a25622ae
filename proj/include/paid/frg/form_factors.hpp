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
#include <utility>
#include <vector>

namespace paid::frg {

/// Orthonormal trigonometric basis on the Brillouin zone [-pi, pi]^2.
///
/// Every member is a product of normalized one-dimensional factors from
/// {1, cos p, sin p, cos 2p, sin 2p}; size 9 uses harmonics up to 1, size 25
/// up to 2. Member 0 is the constant 1/(2 pi). Orthonormality is exact:
/// int f_m f_n dp = delta_mn over the zone.
class FormFactorBasis {
 public:
  static FormFactorBasis make(int size) {
    if (size != 9 && size != 25) {
      throw std::invalid_argument("form-factor basis size must be 9 or 25");
    }
    FormFactorBasis basis;
    const int harmonics = (size == 9) ? 2 : 4;  // 1D factors beyond constant
    // Constant first, then pure-x, pure-y, then mixed products.
    basis.factors_.emplace_back(0, 0);
    for (int a = 1; a <= harmonics; ++a) basis.factors_.emplace_back(a, 0);
    for (int b = 1; b <= harmonics; ++b) basis.factors_.emplace_back(0, b);
    for (int a = 1; a <= harmonics; ++a) {
      for (int b = 1; b <= harmonics; ++b) basis.factors_.emplace_back(a, b);
    }
    return basis;
  }

  int size() const { return static_cast<int>(factors_.size()); }

  double operator()(int index, double px, double py) const {
    if (index < 0 || index >= size()) {
      throw std::invalid_argument("form factor index out of range");
    }
    const auto [a, b] = factors_[index];
    return axis_factor(a, px) * axis_factor(b, py);
  }

 private:
  // kind 0: 1/sqrt(2 pi); odd kinds: cos(((k+1)/2) p)/sqrt(pi);
  // even kinds: sin((k/2) p)/sqrt(pi).
  static double axis_factor(int kind, double p) {
    static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
    static const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    switch (kind) {
      case 0: return inv_sqrt_2pi;
      case 1: return std::cos(p) * inv_sqrt_pi;
      case 2: return std::sin(p) * inv_sqrt_pi;
      case 3: return std::cos(2.0 * p) * inv_sqrt_pi;
      default: return std::sin(2.0 * p) * inv_sqrt_pi;
    }
  }

  std::vector<std::pair<int, int>> factors_;
};

inline double form_factor(int index, double px, double py,
                          const FormFactorBasis& basis) {
  return basis(index, px, py);
}

}  // namespace paid::frg
