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
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "paid/errors.hpp"
#include "paid/family.hpp"
#include "paid/task_container.hpp"

namespace paid {

enum class EpsilonMode { absolute, relative };

/// Floor for the denominator of the relative error criterion.
inline constexpr double kValueFloor = 1e-12;
/// Rectangles below this side length are never subdivided; hitting one at
/// the top of the heap aborts the run with a singularity diagnostic.
inline constexpr double kMinSide = 1e-12;

struct AdaptiveConfig {
  double epsilon = 1e-6;
  EpsilonMode epsilon_mode = EpsilonMode::relative;
  int rule_order = 4;             // coarse panel count N; fine rule uses 2N
  int max_task = 10;              // tasks extracted per critical-region entry
  int workers = 1;
  std::int64_t eval_budget = 1'000'000'000;
  /// Optional instrumentation: called with each task just before it is
  /// refined. In parallel runs the callback fires from worker threads.
  std::function<void(const Task&)> on_refine;
};

inline void require_valid(const AdaptiveConfig& config) {
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  if (config.rule_order < 2 || config.rule_order % 2 != 0) {
    throw std::invalid_argument("rule order must be even and >= 2");
  }
  if (config.max_task < 1) throw std::invalid_argument("max_task must be >= 1");
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (config.eval_budget < 1) throw std::invalid_argument("eval_budget must be >= 1");
}

struct FamilyResult {
  std::vector<double> values;   // per member: sum of val_fine over its leaves
  double global_err = 0.0;
  std::int64_t eval_count = 0;
  std::int64_t task_count = 0;
  bool converged = false;
};

namespace detail {

/// Absolute threshold the global error is held against, given the current
/// estimate of the summed family value.
inline double resolved_threshold(const AdaptiveConfig& config, double value_sum) {
  if (config.epsilon_mode == EpsilonMode::absolute) return config.epsilon;
  return config.epsilon * std::max(std::abs(value_sum), kValueFloor);
}

inline void check_refinable(const Task& task) {
  if (task.domain.min_side() < kMinSide) {
    throw SingularityError(task.id, task.domain.x_lo, task.domain.x_hi,
                           task.domain.y_lo, task.domain.y_hi);
  }
}

inline FamilyResult collect_result(const IntegrandFamily& family,
                                   TaskContainer& container, bool converged) {
  const auto ledger = container.resum();
  container.resync(ledger);
  FamilyResult result;
  result.values.assign(family.size(), 0.0);
  for (const Task& t : container.tasks()) {
    result.values[t.id] += t.val_fine;
  }
  result.global_err = ledger.err_sum;
  result.eval_count = container.eval_count();
  result.task_count = static_cast<std::int64_t>(container.size());
  result.converged = converged;
  return result;
}

/// ThresholdFn: double(const TaskContainer::Ledger&) -> absolute threshold.
/// The ledger prefilter is cheap; a passing prefilter is confirmed against
/// an exact re-summation before the loop stops.
template <typename ThresholdFn>
bool serial_converged(TaskContainer& container, ThresholdFn&& threshold) {
  TaskContainer::Ledger running{container.global_err(), container.value_sum(),
                                container.value_l1()};
  if (!(container.global_err() < threshold(running))) return false;
  const auto exact = container.resum();
  container.resync(exact);
  return exact.err_sum < threshold(exact);
}

template <typename ThresholdFn>
FamilyResult serial_adaptive(const IntegrandFamily& family,
                             const AdaptiveConfig& config,
                             ThresholdFn&& threshold) {
  const QuadPairRule pair = make_pair(config.rule_order);
  TaskContainer container = init_container(family, pair);

  bool converged = false;
  std::vector<Task> children;
  while (true) {
    if (serial_converged(container, threshold)) {
      converged = true;
      break;
    }
    if (container.eval_count() >= config.eval_budget) break;

    const std::vector<Task> batch = container.extract_bulk(config.max_task);
    children.clear();
    for (const Task& parent : batch) {
      check_refinable(parent);
      if (config.on_refine) config.on_refine(parent);
      for (Task& child : refine_task(parent, family, pair)) {
        children.push_back(child);
      }
    }
    container.commit(batch, children);
  }
  return collect_result(family, container, converged);
}

struct ParallelState {
  std::mutex mutex;
  std::atomic<bool> done{false};
  std::exception_ptr failure;  // first failure wins, guarded by mutex
};

/// One parallel phase: workers extract/refine/commit until the running
/// ledger meets the criterion or the budget is spent. The criterion read is
/// O(1), so it rides along inside the commit critical section; the worker
/// whose commit satisfies it raises the done flag, which hard-bounds the
/// excess work after satisfaction to the tasks then in flight (at most
/// workers * max_task refinements). Returns with all workers joined and the
/// container quiescent.
inline void parallel_phase(const IntegrandFamily& family,
                           const AdaptiveConfig& config,
                           const QuadPairRule& pair, TaskContainer& container,
                           ParallelState& state) {
  state.done.store(false, std::memory_order_relaxed);

  auto worker = [&]() {
    std::vector<Task> children;
    try {
      while (true) {
        std::vector<Task> batch;
        {
          std::lock_guard<std::mutex> lock(state.mutex);
          if (container.eval_count() >= config.eval_budget) {
            state.done.store(true, std::memory_order_release);
          }
          if (state.done.load(std::memory_order_acquire)) break;
          batch = container.extract_bulk(config.max_task);
        }
        if (batch.empty()) {
          // Other workers hold the remaining tasks; their commits refill
          // the heap (or raise the done flag).
          if (state.done.load(std::memory_order_acquire)) break;
          std::this_thread::yield();
          continue;
        }
        children.clear();
        for (const Task& parent : batch) {
          check_refinable(parent);
          if (config.on_refine) config.on_refine(parent);
          for (Task& child : refine_task(parent, family, pair)) {
            children.push_back(child);
          }
        }
        {
          std::lock_guard<std::mutex> lock(state.mutex);
          const double err = container.commit(batch, children);
          if (err < resolved_threshold(config, container.value_sum())) {
            state.done.store(true, std::memory_order_release);
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(state.mutex);
      if (!state.failure) state.failure = std::current_exception();
      state.done.store(true, std::memory_order_release);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(config.workers);
  for (int rank = 0; rank < config.workers; ++rank) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) t.join();
  if (state.failure) std::rethrow_exception(state.failure);
}

}  // namespace detail

/// Integrates the whole family under one global error criterion.
///
/// Workers repeatedly extract the highest-error tasks in bulk, subdivide
/// each domain once per axis, evaluate the four children and commit them
/// back, until the summed error of all tasks of all members drops below
/// the resolved threshold (or the evaluation budget runs out, in which
/// case converged=false and the best-effort values are returned).
///
/// The criterion is read off the running ledger inside the commit critical
/// section and latched into a done flag the other workers observe, so the
/// excess refinement after the criterion is met is bounded by the tasks
/// then in flight and cannot corrupt results. The final ledger is re-summed
/// exactly after the workers join; the parallel phase restarts in the
/// unlikely case the exact sum still misses the threshold.
inline FamilyResult run_adaptive(const IntegrandFamily& family,
                                 const AdaptiveConfig& config) {
  require_valid(config);
  require_valid(family);

  const auto family_threshold = [&config](const TaskContainer::Ledger& ledger) {
    return detail::resolved_threshold(config, ledger.value_sum);
  };

  if (config.workers == 1) {
    return detail::serial_adaptive(family, config, family_threshold);
  }

  const QuadPairRule pair = make_pair(config.rule_order);
  TaskContainer container = init_container(family, pair);
  detail::ParallelState state;
  bool converged = false;
  while (true) {
    if (detail::serial_converged(container, family_threshold)) {
      converged = true;
      break;
    }
    if (container.eval_count() >= config.eval_budget) break;
    detail::parallel_phase(family, config, pair, container, state);
    const auto exact = container.resum();
    container.resync(exact);
  }
  return detail::collect_result(family, container, converged);
}

/// Deterministic single-threaded reference: one task per round, strict
/// priority order, bit-reproducible refinement sequence and results.
inline FamilyResult serial_reference(const IntegrandFamily& family,
                                     const AdaptiveConfig& config) {
  AdaptiveConfig serial = config;
  serial.workers = 1;
  serial.max_task = 1;
  return run_adaptive(family, serial);
}

}  // namespace paid
