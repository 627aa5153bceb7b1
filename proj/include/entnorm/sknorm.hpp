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
#include <optional>
#include <string>
#include <vector>

#include "entnorm/linalg.hpp"
#include "entnorm/schmidt.hpp"

namespace entnorm {

/// Certified bracket on a norm value, with the method that produced each end.
struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::string lower_method;
  std::string upper_method;
  bool exact = false;

  double width() const noexcept { return upper - lower; }
  bool contains(double value, double tol = 0.0) const noexcept {
    return lower - tol <= value && value <= upper + tol;
  }
};

/// Width below which an interval is reported as exact.
inline constexpr double kExactWidth = 1e-9;

/// Sets `exact` from the width, scaled by max(1, upper).
void finalize(NormInterval& interval);

struct SeeSawOptions {
  Index restarts = 32;
  Index max_iter = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

struct SeeSawResult {
  PureState v;
  PureState w;
  double value = 0.0;  // |<v|X|w>| of the returned pair
  Index iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  /// Objective after every full iteration, one trace per restart.
  std::vector<std::vector<double>> traces;
};

/// ||v><v||_{S(k)} = r_k(|v><v|) = sum of the k largest squared Schmidt coefficients.
double sk_pure(const PureState& v, Index k);
/// ||v><w||_{S(k)} = s_k_norm(v) * s_k_norm(w).
double sk_elementary(const PureState& v, const PureState& w, Index k);

/// Alternating maximization of |<v|X|w>| over Schmidt-rank-k unit vectors.
/// Each half step is exact: for fixed w the best v is the normalized
/// Schmidt truncation of X w. The value is a lower bound on ||X||_{S(k)}.
SeeSawResult seesaw_lower(const BipartiteOperator& x, Index k, const SeeSawOptions& opts = {});

/// Upper bound on ||X||_{S(k)} without any search: the operator norm, or the
/// triangle inequality over the singular value decomposition if smaller.
double sk_upper_bound(const BipartiteOperator& x, Index k);

struct SkEstimate {
  NormInterval interval;
  /// Best Schmidt-rank-k pair found; |<v|X|w>| equals interval.lower.
  std::optional<SeeSawResult> argmax;
};

SkEstimate sk_estimate(const BipartiteOperator& x, Index k, const SeeSawOptions& opts = {});
NormInterval sk_bounds(const BipartiteOperator& x, Index k, const SeeSawOptions& opts = {});

/// Upper bound on r_k(Y) for Hermitian Y without any search.
double prod_radius_upper_bound(const BipartiteOperator& y, Index k);
NormInterval prod_radius_bounds(const BipartiteOperator& y, Index k, const SeeSawOptions& opts = {});

enum class BlockPositivity { certified_positive, certified_negative, undecided };
const char* to_string(BlockPositivity verdict) noexcept;

struct BlockPositivityResult {
  BlockPositivity verdict;
  double shift;            // c = lambda_max(Y)
  NormInterval sk_of_gap;  // bounds on ||cI - Y||_{S(k)}
  /// For certified_negative: a unit SR <= k vector with <u|Y|u> < 0.
  std::optional<PureState> violating;
  double violation = 0.0;  // <u|Y|u> of the violating vector
};

/// Decision tolerance for comparing the shift against the gap bounds,
/// scaled by max(1, |c|).
inline constexpr double kBlockPosTol = 1e-9;

BlockPositivityResult block_positivity_check(const BipartiteOperator& y, Index k,
                                             const SeeSawOptions& opts = {});

/// r_k(X) as the smallest s with s I +- X both k-block positive, by bisection
/// on [0, ||X||].
NormInterval prod_radius_bisect(const BipartiteOperator& x, Index k, Index depth = 30,
                                const SeeSawOptions& opts = {});

}  // namespace entnorm
