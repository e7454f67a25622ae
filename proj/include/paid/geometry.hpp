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
#include <stdexcept>

namespace paid {

/// Axis-aligned rectangle, the unit of domain subdivision.
struct Rectangle {
  double x_lo = -1.0;
  double x_hi = 1.0;
  double y_lo = -1.0;
  double y_hi = 1.0;

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }
  double area() const { return width() * height(); }
  double min_side() const { return std::min(width(), height()); }

  bool valid() const {
    return std::isfinite(x_lo) && std::isfinite(x_hi) && std::isfinite(y_lo) &&
           std::isfinite(y_hi) && x_lo < x_hi && y_lo < y_hi;
  }

  /// Equal bisection in each axis; children ordered SW, SE, NW, NE.
  std::array<Rectangle, 4> quadrants() const {
    const double xm = 0.5 * (x_lo + x_hi);
    const double ym = 0.5 * (y_lo + y_hi);
    return {Rectangle{x_lo, xm, y_lo, ym}, Rectangle{xm, x_hi, y_lo, ym},
            Rectangle{x_lo, xm, ym, y_hi}, Rectangle{xm, x_hi, ym, y_hi}};
  }

  bool contains(const Rectangle& other) const {
    return x_lo <= other.x_lo && other.x_hi <= x_hi && y_lo <= other.y_lo &&
           other.y_hi <= y_hi;
  }
};

inline void require_valid(const Rectangle& r) {
  if (!r.valid()) {
    throw std::invalid_argument("rectangle must be finite with positive extent");
  }
}

}  // namespace paid
