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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "paid/local.hpp"

using namespace paid;

namespace {

double runge_product(double x, double y) {
  return 1.0 / ((1.0 + 25.0 * x * x) * (1.0 + 25.0 * y * y));
}

}  // namespace

TEST_CASE("run_local on trivially exact members") {
  AdaptiveConfig config;
  config.epsilon = 1e-10;
  config.epsilon_mode = EpsilonMode::absolute;

  const Rectangle bz{-M_PI, M_PI, -M_PI, M_PI};
  const LocalResult c =
      run_local([](double, double) { return 1.0; }, bz, config);
  CHECK(c.value == Catch::Approx(4.0 * M_PI * M_PI).epsilon(1e-13));
  CHECK(c.eval_count == 81);
  CHECK(c.converged);

  const Rectangle unit{-1.0, 1.0, -1.0, 1.0};
  const LocalResult p = run_local(
      [](double x, double y) { return x * x * y * y; }, unit, config);
  CHECK(p.value == Catch::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(p.eval_count == 81);
}

TEST_CASE("run_local resolves the Runge product to the analytic value") {
  AdaptiveConfig config;
  config.epsilon = 1e-8;
  config.epsilon_mode = EpsilonMode::absolute;

  const Rectangle unit{-1.0, 1.0, -1.0, 1.0};
  const LocalResult r = run_local(runge_product, unit, config);
  const double exact = std::pow(0.4 * std::atan(5.0), 2);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-7);
}

TEST_CASE("single-member family: local and global strategies coincide") {
  IntegrandFamily family;
  family.domain = Rectangle{-1.0, 1.0, -1.0, 1.0};
  family.add(runge_product, "runge");

  AdaptiveConfig config;
  config.epsilon = 1e-7;
  config.epsilon_mode = EpsilonMode::absolute;

  const FamilyResult global = serial_reference(family, config);
  const LocalResult local = run_local(runge_product, family.domain, config);

  CHECK(local.value == global.values[0]);  // identical refinement sequence
  CHECK(local.eval_count == global.eval_count);
  CHECK(local.task_count == global.task_count);
  CHECK(local.err == global.global_err);
}

TEST_CASE("run_family_local on constants costs one pair evaluation each") {
  IntegrandFamily family;
  family.domain = Rectangle{-1.0, 1.0, -1.0, 1.0};
  for (int i = 1; i <= 5; ++i) {
    const double c = i;
    family.add([c](double, double) { return c; }, "c" + std::to_string(i));
  }

  AdaptiveConfig config;
  config.epsilon = 1e-8;
  config.epsilon_mode = EpsilonMode::absolute;
  config.workers = 2;

  const FamilyResult r = run_family_local(family, config);
  CHECK(r.eval_count == 5 * 81);
  CHECK(r.converged);
  for (int i = 0; i < 5; ++i) {
    CHECK(r.values[i] == Catch::Approx(4.0 * (i + 1)).epsilon(1e-13));
  }
}

TEST_CASE("the sharp member consumes at least 90 percent of evaluations") {
  std::int64_t smooth_calls = 0, sharp_calls = 0;
  IntegrandFamily family;
  family.domain = Rectangle{-M_PI, M_PI, -M_PI, M_PI};
  family.add(
      [&smooth_calls](double x, double y) {
        ++smooth_calls;
        return std::cos(x) + y * y;
      },
      "smooth");
  family.add(
      [&sharp_calls](double x, double y) {
        ++sharp_calls;
        const double dx = x + 1.2, dy = y;
        return std::exp(-80.0 * (dx * dx + dy * dy));
      },
      "sharp");

  AdaptiveConfig config;
  config.epsilon = 1e-9;
  config.epsilon_mode = EpsilonMode::absolute;

  const FamilyResult r = run_family_local(family, config);
  CHECK(r.converged);
  const double share =
      static_cast<double>(sharp_calls) / (sharp_calls + smooth_calls);
  CHECK(share >= 0.90);
  CHECK(r.eval_count == smooth_calls + sharp_calls);
}

TEST_CASE("local and global answers agree on a mixed family") {
  IntegrandFamily family;
  family.domain = Rectangle{-1.0, 1.0, -1.0, 1.0};
  family.add(runge_product, "runge");
  family.add([](double x, double y) { return std::exp(-8.0 * (x * x + y * y)); },
             "bump");

  AdaptiveConfig config;
  config.epsilon = 1e-7;
  config.epsilon_mode = EpsilonMode::absolute;

  const FamilyResult local = run_family_local(family, config);
  const FamilyResult global = run_adaptive(family, config);
  REQUIRE(local.converged);
  REQUIRE(global.converged);
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(std::abs(local.values[i] - global.values[i]) <= 10.0 * config.epsilon);
  }
}

TEST_CASE("relative mode floors the threshold at quadrature roundoff") {
  // A member that integrates to exactly zero by parity: a pure relative
  // criterion would demand accuracy below floating-point resolution.
  AdaptiveConfig config;
  config.epsilon = 1e-6;
  config.epsilon_mode = EpsilonMode::relative;
  config.eval_budget = 50'000'000;

  const Rectangle unit{-1.0, 1.0, -1.0, 1.0};
  const LocalResult r = run_local(
      [](double x, double y) {
        return x * std::exp(-20.0 * (x * x + y * y));
      },
      unit, config);
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-10);
  CHECK(r.eval_count < 10'000'000);
}
