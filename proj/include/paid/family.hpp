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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paid/geometry.hpp"

namespace paid {

using Integrand = std::function<double(double, double)>;

/// An indexed set of scalar integrands over one shared rectangle.
/// This is the object the driver integrates as a single job with one
/// global error criterion.
struct IntegrandFamily {
  Rectangle domain;
  std::vector<Integrand> members;
  std::vector<std::string> labels;

  std::size_t size() const { return members.size(); }

  void add(Integrand f, std::string label) {
    members.push_back(std::move(f));
    labels.push_back(std::move(label));
  }
};

inline void require_valid(const IntegrandFamily& family) {
  require_valid(family.domain);
  if (family.members.empty()) {
    throw std::invalid_argument("family must contain at least one member");
  }
  if (family.members.size() != family.labels.size()) {
    throw std::invalid_argument("family members and labels must align");
  }
}

}  // namespace paid
