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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "paid/driver.hpp"
#include "paid/family.hpp"

namespace paid {

/// Result of integrating a single member in isolation.
struct LocalResult {
  double value = 0.0;
  double err = 0.0;
  std::int64_t eval_count = 0;
  std::int64_t task_count = 0;
  bool converged = false;
};

namespace detail {

/// In relative mode a member whose integral cancels to ~0 would otherwise be
/// asked for an absolute accuracy below floating-point resolution (epsilon
/// times a vanishing value). The error sum cannot drop below roundoff of the
/// accumulated quadrature mass, so the threshold is floored there.
inline constexpr double kRoundoffGuard = 64.0 * std::numeric_limits<double>::epsilon();

inline double member_threshold(const AdaptiveConfig& config,
                               const TaskContainer::Ledger& ledger) {
  const double resolved = resolved_threshold(config, ledger.value_sum);
  if (config.epsilon_mode == EpsilonMode::relative) {
    return std::max(resolved, kRoundoffGuard * ledger.value_l1);
  }
  return resolved;
}

}  // namespace detail

/// Serial adaptive integration of one integrand with an isolated error
/// criterion: repeatedly refine the largest-error subdomain until the
/// member's own error sum satisfies the member's own threshold.
inline LocalResult run_local(Integrand member, const Rectangle& domain,
                             const AdaptiveConfig& config) {
  require_valid(config);
  IntegrandFamily single;
  single.domain = domain;
  single.add(std::move(member), "member");

  AdaptiveConfig serial = config;
  serial.workers = 1;
  serial.max_task = 1;
  const FamilyResult r = detail::serial_adaptive(
      single, serial, [&serial](const TaskContainer::Ledger& ledger) {
        return detail::member_threshold(serial, ledger);
      });

  LocalResult out;
  out.value = r.values[0];
  out.err = r.global_err;
  out.eval_count = r.eval_count;
  out.task_count = r.task_count;
  out.converged = r.converged;
  return out;
}

/// The per-integral baseline strategy: every member is integrated by its own
/// isolated adaptive loop, members distributed across workers through a
/// dynamic queue. In absolute mode the family tolerance is split evenly
/// (epsilon / member_count); in relative mode each member uses epsilon
/// against its own value. The evaluation budget is sliced evenly as well.
inline FamilyResult run_family_local(const IntegrandFamily& family,
                                     const AdaptiveConfig& config) {
  require_valid(config);
  require_valid(family);
  const std::size_t m = family.size();

  AdaptiveConfig member_config = config;
  member_config.workers = 1;
  member_config.max_task = 1;
  if (config.epsilon_mode == EpsilonMode::absolute) {
    member_config.epsilon = config.epsilon / static_cast<double>(m);
  }
  member_config.eval_budget =
      std::max<std::int64_t>(1, config.eval_budget / static_cast<std::int64_t>(m));

  std::vector<LocalResult> results(m);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto worker = [&]() {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= m) break;
        results[i] = run_local(family.members[i], family.domain, member_config);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(m, std::memory_order_relaxed);  // drain the queue
    }
  };

  const int threads = std::min<int>(config.workers, static_cast<int>(m));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  FamilyResult out;
  out.values.resize(m);
  out.converged = true;
  for (std::size_t i = 0; i < m; ++i) {
    out.values[i] = results[i].value;
    out.global_err += results[i].err;
    out.eval_count += results[i].eval_count;
    out.task_count += results[i].task_count;
    out.converged = out.converged && results[i].converged;
  }
  return out;
}

}  // namespace paid
