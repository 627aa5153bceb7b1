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

#include <optional>
#include <string>

#include "entnorm/linalg.hpp"
#include "entnorm/schmidt.hpp"

namespace entnorm {

/// Throws ErrorCode::precondition unless rho is Hermitian, PSD and of unit
/// trace, each within `tol`.
void require_density(const BipartiteOperator& rho, double tol = 1e-9);

enum class Criterion { gen_realign, weak_realign, cross_norm };
const char* to_string(Criterion c) noexcept;

struct DetectionReport {
  Criterion criterion;
  Index k;
  double value;      // the value compared against the threshold
  double threshold;
  bool detected;     // value > threshold + tol; a detection certifies SN > k
  bool filtered;     // value came from the locally filtered state
  double tol;
  double unfiltered_value;
  std::optional<double> filtered_value;
  std::optional<bool> filter_converged;
};

inline constexpr double kDetectTol = 1e-9;

/// || L(rho) ||^dual_{(k^2, 2)}; at most 1 whenever SN(rho) <= k.
double realignment_value(const BipartiteOperator& rho, Index k);

DetectionReport detect_schmidt_number(const BipartiteOperator& rho, Index k, bool use_filter = false,
                                      double tol = kDetectTol);

/// ||L(rho)||_tr against the threshold k.
DetectionReport weak_realignment(const BipartiteOperator& rho, Index k, double tol = kDetectTol);

enum class SchmidtRankVerdict { sr_at_most_k, sr_exceeds_k };
const char* to_string(SchmidtRankVerdict v) noexcept;

struct PureStateTest {
  SchmidtRankVerdict verdict;
  double value;
};

/// Exact for pure states: SR(v) <= k iff realignment_value(|v><v|, k) <= 1.
PureStateTest pure_state_sr_test(const PureState& v, Index k, double tol = kDetectTol);

struct FilterResult {
  BipartiteOperator rho;   // (F_A (x) F_B) rho (F_A (x) F_B)^dagger, unit trace
  ComplexMatrix f_a;
  ComplexMatrix f_b;
  bool converged;
  Index iterations;
  double marginal_deviation;  // Frobenius distance of the marginals from flat on their support
};

/// Alternating marginal whitening: applies rho_A^{-1/2} (x) I and
/// I (x) rho_B^{-1/2} (pseudo-inverses on the supports), renormalizing the
/// trace, until both marginals are flat on their supports.
FilterResult local_filter(const BipartiteOperator& rho, double tol = 1e-9, Index max_iter = 200);

}  // namespace entnorm
