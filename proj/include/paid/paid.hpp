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

// PAID: parallel adaptive integration in two dimensions over families of
// integrands sharing one domain and one global error criterion, plus a
// per-integral baseline and the renormalization-group bubble workload the
// scheme was built for.

#include "paid/driver.hpp"
#include "paid/errors.hpp"
#include "paid/family.hpp"
#include "paid/frg/bubble.hpp"
#include "paid/frg/form_factors.hpp"
#include "paid/frg/kernel_oracle.hpp"
#include "paid/frg/kernels.hpp"
#include "paid/frg/model.hpp"
#include "paid/geometry.hpp"
#include "paid/local.hpp"
#include "paid/rules.hpp"
#include "paid/task_container.hpp"
#include "paid/verify.hpp"

namespace paid {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace paid
