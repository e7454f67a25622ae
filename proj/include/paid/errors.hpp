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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paid {

/// Thrown when an integrand returns a non-finite value. Carries the
/// offending point and, when known, the family member index.
class EvaluationError : public std::runtime_error {
 public:
  static constexpr std::ptrdiff_t kNoMember = -1;

  EvaluationError(double x, double y, std::ptrdiff_t member = kNoMember)
      : std::runtime_error(format(x, y, member)), x_(x), y_(y), member_(member) {}

  double x() const { return x_; }
  double y() const { return y_; }
  std::ptrdiff_t member() const { return member_; }

 private:
  static std::string format(double x, double y, std::ptrdiff_t member) {
    std::string msg = "integrand returned a non-finite value at (" +
                      std::to_string(x) + ", " + std::to_string(y) + ")";
    if (member != kNoMember) {
      msg += " for member " + std::to_string(member);
    }
    return msg;
  }

  double x_;
  double y_;
  std::ptrdiff_t member_;
};

/// Thrown when the top-priority task's rectangle has shrunk below the
/// minimum side length, i.e. refinement is chasing a non-integrable feature.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(std::size_t member, double x_lo, double x_hi, double y_lo,
                   double y_hi)
      : std::runtime_error(
            "refinement stalled on a degenerate rectangle [" +
            std::to_string(x_lo) + ", " + std::to_string(x_hi) + "] x [" +
            std::to_string(y_lo) + ", " + std::to_string(y_hi) +
            "] of member " + std::to_string(member)),
        member_(member) {}

  std::size_t member() const { return member_; }

 private:
  std::size_t member_;
};

/// Thrown when the reference frequency-integral quadrature fails to settle
/// within its refinement budget.
class OracleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace paid
