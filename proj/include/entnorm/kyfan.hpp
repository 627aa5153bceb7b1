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

#include <span>

#include "entnorm/linalg.hpp"

namespace entnorm {

/// Split point of the closed-form (k,2) dual: the head sigma_1..sigma_r is
/// kept as is, the tail is flattened to sigma_tilde over k - r slots.
struct BreakIndexResult {
  Index r;
  double sigma_tilde;
};

/// Largest 1 <= r < k with sigma_r > sum_{i>r} sigma_i / (k - r), else r = 0.
/// `sigma` must be descending and nonnegative; entries beyond its length are
/// treated as zero.
BreakIndexResult break_index(std::span<const double> sigma, Index k);

/// sqrt(sum of the k largest squared entries) of a descending vector.
double k2_norm_values(std::span<const double> sigma, Index k);
/// Closed-form dual of k2_norm_values.
double k2_dual_values(std::span<const double> sigma, Index k);

double k2_norm(const ComplexMatrix& x, Index k);
double k2_dual(const ComplexMatrix& x, Index k);

}  // namespace entnorm
