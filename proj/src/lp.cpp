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

#include "entnorm/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "entnorm/error.hpp"

namespace entnorm::lp {

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kTieTol = 1e-11;

class Simplex {
 public:
  Simplex(const Eigen::MatrixXd& a, const RealVector& b, const Options& opts)
      : rows_(a.rows()), cols_(a.cols()), opts_(opts), basis_(static_cast<std::size_t>(a.rows())) {
    // Columns: [original | artificial | rhs]; last row holds reduced costs.
    t_ = Tableau::Zero(rows_ + 1, cols_ + rows_ + 1);
    for (Index i = 0; i < rows_; ++i) {
      const double sign = b(i) < 0.0 ? -1.0 : 1.0;
      t_.row(i).head(cols_) = sign * a.row(i);
      t_(i, cols_ + i) = 1.0;
      t_(i, rhs()) = sign * b(i);
      basis_[static_cast<std::size_t>(i)] = cols_ + i;
    }
    limit_ = opts.max_iterations > 0 ? opts.max_iterations : 50 * (rows_ + cols_);
  }

  Index rhs() const { return cols_ + rows_; }

  // Loads cost vector `c` over the first `ncost` columns and prices out the basis.
  void set_objective(const RealVector& c) {
    t_.row(rows_).setZero();
    t_.row(rows_).head(c.size()) = c.transpose();
    for (Index i = 0; i < rows_; ++i) {
      const Index j = basis_[static_cast<std::size_t>(i)];
      const double cb = j < c.size() ? c(j) : 0.0;
      if (cb != 0.0) t_.row(rows_) -= cb * t_.row(i);
    }
  }

  // Runs pivots over columns [0, enter_limit). Returns the terminal status.
  // Dantzig pricing with a lexicographic ratio test: ties in the minimum
  // ratio are broken by comparing rows of B^-1 (the artificial block) scaled
  // by the pivot entry, which rules out cycling on degenerate vertices.
  Status run(Index enter_limit) {
    std::vector<Index> tied;
    while (iterations_ < limit_) {
      Index enter = -1;
      double best = -opts_.cost_tol;
      for (Index j = 0; j < enter_limit; ++j) {
        const double rc = t_(rows_, j);
        if (rc < best) {
          enter = j;
          best = rc;
        }
      }
      if (enter < 0) return Status::optimal;

      double ratio = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < rows_; ++i) {
        const double p = t_(i, enter);
        if (p > opts_.pivot_tol) ratio = std::min(ratio, std::max(0.0, t_(i, rhs())) / p);
      }
      if (!std::isfinite(ratio)) return Status::unbounded;
      tied.clear();
      const double slack = kTieTol * std::max(1.0, ratio);
      for (Index i = 0; i < rows_; ++i) {
        const double p = t_(i, enter);
        if (p > opts_.pivot_tol && std::max(0.0, t_(i, rhs())) / p <= ratio + slack) tied.push_back(i);
      }
      Index leave = tied.front();
      for (std::size_t c = 1; c < tied.size(); ++c) {
        if (lex_less(tied[c], leave, enter)) leave = tied[c];
      }
      pivot(leave, enter);
      ++iterations_;
    }
    return Status::iteration_limit;
  }

  // Row a precedes row b when B^-1[a, :] / t[a, enter] is lexicographically
  // smaller than B^-1[b, :] / t[b, enter].
  bool lex_less(Index a, Index b, Index enter) const {
    const double pa = t_(a, enter);
    const double pb = t_(b, enter);
    for (Index j = 0; j < rows_; ++j) {
      const double va = t_(a, cols_ + j) / pa;
      const double vb = t_(b, cols_ + j) / pb;
      if (va < vb - kTieTol) return true;
      if (va > vb + kTieTol) return false;
    }
    return false;
  }

  void pivot(Index row, Index col) {
    t_.row(row) /= t_(row, col);
    const Eigen::RowVectorXd prow = t_.row(row);
    for (Index i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * prow;
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Pivots basic artificials out where an original column allows it.
  void expel_artificials() {
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < cols_) continue;
      Index best = -1;
      double mag = opts_.pivot_tol;
      for (Index j = 0; j < cols_; ++j) {
        if (std::abs(t_(i, j)) > mag) {
          mag = std::abs(t_(i, j));
          best = j;
        }
      }
      if (best >= 0) pivot(i, best);
    }
  }

  double objective() const { return -t_(rows_, rhs()); }

  RealVector primal() const {
    RealVector x = RealVector::Zero(cols_);
    for (Index i = 0; i < rows_; ++i) {
      const Index j = basis_[static_cast<std::size_t>(i)];
      if (j < cols_) x(j) = std::max(0.0, t_(i, rhs()));
    }
    return x;
  }

  Index iterations() const { return iterations_; }

 private:
  Index rows_;
  Index cols_;
  Options opts_;
  Tableau t_;
  std::vector<Index> basis_;
  Index iterations_ = 0;
  Index limit_ = 0;
};

}  // namespace

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

Result solve(const Eigen::MatrixXd& a, const RealVector& b, const RealVector& c,
             const Options& opts) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    fail(ErrorCode::parameter, "lp::solve: inconsistent shapes");
  }
  const Index rows = a.rows();
  const Index cols = a.cols();
  Simplex s(a, b, opts);

  // Phase one: minimize the sum of artificials.
  RealVector phase1 = RealVector::Zero(cols + rows);
  phase1.tail(rows).setOnes();
  s.set_objective(phase1);
  Status st = s.run(cols);
  Result out;
  if (st == Status::iteration_limit) {
    out.status = st;
    out.iterations = s.iterations();
    return out;
  }
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (s.objective() > opts.feasibility_tol * scale) {
    out.status = Status::infeasible;
    out.iterations = s.iterations();
    return out;
  }
  s.expel_artificials();

  s.set_objective(c);
  st = s.run(cols);
  out.status = st;
  out.iterations = s.iterations();
  if (st == Status::optimal) {
    out.x = s.primal();
    out.objective = c.dot(out.x);
  }
  return out;
}

}  // namespace entnorm::lp
