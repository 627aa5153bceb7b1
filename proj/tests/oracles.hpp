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

// Brute-force reference computations used only by the tests. None of these
// call into the closed forms they are compared against.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "entnorm/linalg.hpp"
#include "entnorm/lp.hpp"
#include "entnorm/random.hpp"

namespace oracle {

using namespace entnorm;

/// sqrt(sum of the k largest squared singular values) via subspace iteration:
/// Q <- orth(X X^dagger Q), value ||Q^dagger X||_F.
inline double k2_norm_subspace(const ComplexMatrix& x, Index k, std::uint64_t seed,
                               int restarts = 8, int iters = 400) {
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
    ComplexMatrix q = gaussian_matrix(x.rows(), k, rng);
    for (int it = 0; it < iters; ++it) {
      Eigen::HouseholderQR<ComplexMatrix> qr(x * (x.adjoint() * q));
      q = qr.householderQ() * ComplexMatrix::Identity(x.rows(), k);
    }
    best = std::max(best, (q.adjoint() * x).norm());
  }
  return best;
}

/// Projection onto {y_1 >= y_2 >= ... >= 0} (pool adjacent violators).
inline std::vector<double> project_monotone(const std::vector<double>& y) {
  std::vector<double> level;
  std::vector<int> count;
  for (double v : y) {
    level.push_back(v);
    count.push_back(1);
    while (level.size() > 1 && level[level.size() - 2] < level.back()) {
      const double merged = (level[level.size() - 2] * count[count.size() - 2] +
                             level.back() * count.back()) /
                            (count[count.size() - 2] + count.back());
      const int c = count[count.size() - 2] + count.back();
      level.pop_back();
      count.pop_back();
      level.back() = merged;
      count.back() = c;
    }
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < level.size(); ++i)
    for (int c = 0; c < count[i]; ++c) out.push_back(std::max(0.0, level[i]));
  return out;
}

/// sup |<X, Y>| / ||Y||_(k,2) by multistart projected gradient ascent. By von
/// Neumann's trace inequality the supremum is attained with Y sharing X's
/// singular vectors, so the search runs over the descending singular-value
/// profile y of Y; the objective is evaluated on the assembled matrix Y.
inline double k2_dual_ascent(const ComplexMatrix& x, Index k, std::uint64_t seed,
                             int restarts = 200, int iters = 3000) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sigma = svd.singularValues();
  const int len = static_cast<int>(sigma.size());
  auto head_norm = [&](const std::vector<double>& y) {
    double acc = 0.0;
    for (int i = 0; i < std::min<int>(k, len); ++i) acc += y[i] * y[i];
    return std::sqrt(acc);
  };
  auto ratio = [&](const std::vector<double>& y) {
    double dot = 0.0;
    for (int i = 0; i < len; ++i) dot += sigma(i) * y[i];
    const double h = head_norm(y);
    return h > 0.0 ? dot / h : 0.0;
  };

  double best = 0.0;
  std::vector<double> best_y;
  for (int r = 0; r < restarts; ++r) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> y(len);
    for (double& v : y) v = unif(rng);
    std::sort(y.begin(), y.end(), std::greater<>());
    double step = 0.5;
    for (int it = 0; it < iters; ++it) {
      const double h = head_norm(y);
      double dot = 0.0;
      for (int i = 0; i < len; ++i) dot += sigma(i) * y[i];
      std::vector<double> cand(len);
      for (int i = 0; i < len; ++i) {
        const double g = sigma(i) / h - (i < k ? dot * y[i] / (h * h * h) : 0.0);
        cand[i] = y[i] + step * g;
      }
      cand = project_monotone(cand);
      const double ch = head_norm(cand);
      if (ch <= 0.0) break;
      for (double& v : cand) v /= ch;
      if (ratio(cand) >= ratio(y)) {
        y = cand;
        step *= 1.2;
      } else {
        step *= 0.5;
      }
      if (step < 1e-14) break;
    }
    if (ratio(y) > best) {
      best = ratio(y);
      best_y = y;
    }
  }
  // Evaluate on the assembled matrix with the primal norm computed from scratch.
  RealVector yv(len);
  for (int i = 0; i < len; ++i) yv(i) = best_y[i];
  const ComplexMatrix ymat = svd.matrixU() * yv.asDiagonal() * svd.matrixV().adjoint();
  const RealVector ys = Eigen::JacobiSVD<ComplexMatrix>(ymat).singularValues();
  double head = 0.0;
  for (int i = 0; i < std::min<int>(k, len); ++i) head += ys(i) * ys(i);
  return std::abs((x.conjugate().cwiseProduct(ymat)).sum()) / std::sqrt(head);
}

/// Upper bound on the dual of a norm given by an atom set: min sum c_i over
/// nonnegative combinations of the phased atoms reproducing `target`.
inline double atomic_lp(const ComplexVector& target, const std::vector<ComplexVector>& atoms,
                        int phases = 8) {
  const Index len = target.size();
  Eigen::MatrixXd a(2 * len, static_cast<Index>(atoms.size()) * phases);
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    for (int p = 0; p < phases; ++p) {
      const Complex ph = std::polar(1.0, 2.0 * M_PI * p / phases);
      for (Index i = 0; i < len; ++i) {
        const Complex e = ph * atoms[j](i);
        a(i, static_cast<Index>(j) * phases + p) = e.real();
        a(len + i, static_cast<Index>(j) * phases + p) = e.imag();
      }
    }
  }
  RealVector b(2 * len);
  for (Index i = 0; i < len; ++i) {
    b(i) = target(i).real();
    b(len + i) = target(i).imag();
  }
  const lp::Result res = lp::solve(a, b, RealVector::Ones(a.cols()));
  return res.status == lp::Status::optimal ? res.objective : INFINITY;
}

/// max |<a (x) b | v>| over a grid of real product vectors with a relative phase.
inline double product_overlap_grid(const ComplexVector& v, int steps = 400) {
  double best = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double t1 = M_PI * i / steps;
    for (int j = 0; j < steps; ++j) {
      const double t2 = M_PI * j / steps;
      for (int p = 0; p < 8; ++p) {
        const Complex ph = std::polar(1.0, 2.0 * M_PI * p / 8);
        ComplexVector a(2), b(2);
        a << std::cos(t1), ph * std::sin(t1);
        b << std::cos(t2), std::sin(t2);
        ComplexVector ab(4);
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) ab(x * 2 + y) = a(x) * b(y);
        best = std::max(best, std::abs(ab.dot(v)));
      }
    }
  }
  return best;
}

}  // namespace oracle
