// Copyright 2026 The entnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entnorm/linalg.hpp"

namespace entnorm {

struct InvarianceConfig {
  Index dim_a = 3;
  Index dim_b = 3;
  Index k = 1;
  Index trials = 20;
  std::uint64_t seed = 0;
};

struct InvarianceCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const noexcept { return max_deviation <= tolerance; }
};

struct InvarianceReport {
  InvarianceConfig config;
  std::vector<InvarianceCheck> checks;
  bool passed() const noexcept;
};

/// Checks the exact-value paths (Schmidt coefficients, sk_pure, gamma_pure,
/// gamma_rank_one, sk_elementary) against local unitaries, the swap (m == n),
/// the full transpose, and the partial transpose of elementary product ket-bras.
InvarianceReport run_invariance_suite(const InvarianceConfig& config);

}  // namespace entnorm
