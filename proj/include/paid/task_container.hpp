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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "paid/family.hpp"
#include "paid/geometry.hpp"
#include "paid/rules.hpp"

namespace paid {

/// One unit of adaptive work: a family member restricted to a subdomain,
/// with its coarse/fine values and local error estimate.
struct Task {
  std::size_t id = 0;  // family member index
  Rectangle domain;
  double val_coarse = 0.0;
  double val_fine = 0.0;
  double err = 0.0;  // |val_coarse - val_fine|
  std::uint64_t seq = 0;  // insertion stamp, breaks priority ties (older wins)
};

/// Max-heap of tasks keyed by local error, plus the running ledgers the
/// termination criterion needs. Not internally synchronized: the parallel
/// driver serializes access in critical regions, the serial driver owns it
/// outright.
class TaskContainer {
 public:
  explicit TaskContainer(std::int64_t evals_per_task = 0)
      : evals_per_task_(evals_per_task) {}

  /// Exact re-summation of the ledgers from the contained tasks.
  struct Ledger {
    double err_sum = 0.0;
    double value_sum = 0.0;   // sum of val_fine
    double value_l1 = 0.0;    // sum of |val_fine|
  };

  void push(Task task) {
    task.seq = next_seq_++;
    global_err_ += task.err;
    value_sum_ += task.val_fine;
    value_l1_ += std::abs(task.val_fine);
    heap_.push_back(task);
    std::push_heap(heap_.begin(), heap_.end(), less_);
  }

  /// Removes up to `max_task` tasks in non-increasing error order.
  /// The error ledger is deliberately NOT reduced here; that happens at
  /// commit, so the global error keeps covering in-flight work.
  std::vector<Task> extract_bulk(int max_task) {
    std::vector<Task> out;
    const int count = std::min<std::int64_t>(max_task,
                                             static_cast<std::int64_t>(heap_.size()));
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
      std::pop_heap(heap_.begin(), heap_.end(), less_);
      out.push_back(heap_.back());
      heap_.pop_back();
    }
    outstanding_ += out.size();
    return out;
  }

  /// Settles a refinement round: parents leave the ledgers, children enter
  /// the heap and the ledgers. Returns the updated global error.
  double commit(std::span<const Task> parents, std::span<const Task> children) {
    for (const Task& p : parents) {
      global_err_ -= p.err;
      value_sum_ -= p.val_fine;
      value_l1_ -= std::abs(p.val_fine);
    }
    for (const Task& c : children) {
      push(c);
    }
    eval_count_ += static_cast<std::int64_t>(children.size()) * evals_per_task_;
    outstanding_ -= parents.size();
    return global_err_;
  }

  void count_initial_evals(std::size_t members) {
    eval_count_ += static_cast<std::int64_t>(members) * evals_per_task_;
  }

  double global_err() const { return global_err_; }
  double value_sum() const { return value_sum_; }
  double value_l1() const { return value_l1_; }
  std::int64_t eval_count() const { return eval_count_; }
  std::int64_t evals_per_task() const { return evals_per_task_; }
  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }
  /// Tasks still being refined by workers (extracted, not yet committed).
  std::size_t outstanding() const { return outstanding_; }
  const std::vector<Task>& tasks() const { return heap_; }

  Ledger resum() const {
    Ledger ledger;
    for (const Task& t : heap_) {
      ledger.err_sum += t.err;
      ledger.value_sum += t.val_fine;
      ledger.value_l1 += std::abs(t.val_fine);
    }
    return ledger;
  }

  /// Replaces the running ledgers with exactly re-summed values. Only valid
  /// at quiescence (no outstanding tasks).
  void resync(const Ledger& ledger) {
    global_err_ = ledger.err_sum;
    value_sum_ = ledger.value_sum;
    value_l1_ = ledger.value_l1;
  }

 private:
  // Max-heap on err; ties go to the older task for a deterministic order.
  static bool less_(const Task& a, const Task& b) {
    if (a.err != b.err) return a.err < b.err;
    return a.seq > b.seq;
  }

  std::vector<Task> heap_;
  double global_err_ = 0.0;
  double value_sum_ = 0.0;
  double value_l1_ = 0.0;
  std::int64_t eval_count_ = 0;
  std::int64_t evals_per_task_ = 0;
  std::uint64_t next_seq_ = 0;
  std::size_t outstanding_ = 0;
};

/// Builds the initial container: one task per member over the full domain.
inline TaskContainer init_container(const IntegrandFamily& family,
                                    const QuadPairRule& pair) {
  require_valid(family);
  TaskContainer container(pair.evals_per_rect());
  for (std::size_t id = 0; id < family.size(); ++id) {
    const PairResult r = integrate_pair(family.members[id], family.domain, pair,
                                        static_cast<std::ptrdiff_t>(id));
    container.push(Task{id, family.domain, r.q_coarse, r.q_fine, r.err, 0});
  }
  container.count_initial_evals(family.size());
  return container;
}

/// Splits a task's domain once per axis and evaluates the four children.
inline std::array<Task, 4> refine_task(const Task& task,
                                       const IntegrandFamily& family,
                                       const QuadPairRule& pair) {
  std::array<Task, 4> children;
  const auto quads = task.domain.quadrants();
  for (int q = 0; q < 4; ++q) {
    const PairResult r =
        integrate_pair(family.members[task.id], quads[q], pair,
                       static_cast<std::ptrdiff_t>(task.id));
    children[q] = Task{task.id, quads[q], r.q_coarse, r.q_fine, r.err, 0};
  }
  return children;
}

}  // namespace paid
