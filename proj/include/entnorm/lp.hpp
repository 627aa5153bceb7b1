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

#include <Eigen/Dense>

#include "entnorm/linalg.hpp"

namespace entnorm::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };
const char* to_string(Status status) noexcept;

struct Result {
  Status status = Status::iteration_limit;
  RealVector x;          // primal solution (valid when optimal)
  double objective = 0.0;
  Index iterations = 0;
};

struct Options {
  double pivot_tol = 1e-9;
  double cost_tol = 1e-10;
  double feasibility_tol = 1e-8;  // relative to max(1, max|b|)
  Index max_iterations = 0;       // 0: 50 * (rows + cols)
};

/// Dense two-phase simplex for  min c^T x  s.t.  A x = b,  x >= 0.
/// Dantzig pricing with a lexicographic ratio test against cycling.
Result solve(const Eigen::MatrixXd& a, const RealVector& b, const RealVector& c,
             const Options& opts = {});

}  // namespace entnorm::lp
