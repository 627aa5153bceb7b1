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

#include "entnorm/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entnorm/error.hpp"
#include "entnorm/kyfan.hpp"

namespace entnorm {

namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kZeroNorm = 1e-12;

void check_k(const PureState& v, Index k, const char* what) {
  if (k < 1 || k > v.min_dim()) {
    fail(ErrorCode::parameter, std::string(what) + ": k=" + std::to_string(k) +
                                   " outside [1, " + std::to_string(v.min_dim()) + "]");
  }
}

void check_nonzero(const PureState& v, const char* what) {
  if (v.norm() <= kZeroNorm) fail(ErrorCode::degenerate_input, std::string(what) + ": zero vector");
}

std::span<const double> as_span(const RealVector& x) {
  return {x.data(), static_cast<std::size_t>(x.size())};
}

// Full Schmidt frame (min(m, n) terms, zeros included).
struct Frame {
  RealVector alpha;
  ComplexMatrix left;
  ComplexMatrix right;
};

Frame full_frame(const PureState& v) {
  SvdResult s = svd(v.coefficient_matrix());
  // C = U diag(s) W^dagger gives C(i,k) = sum s u_i conj(w_k), so the right
  // Schmidt vectors are the conjugated right singular vectors.
  return {std::move(s.sigma), std::move(s.left), s.right.conjugate()};
}

ComplexVector combine(const ComplexMatrix& left, const ComplexMatrix& right,
                      const RealVector& coeffs) {
  ComplexVector out = ComplexVector::Zero(left.rows() * right.rows());
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i) == 0.0) continue;
    out += coeffs(i) * kron(ComplexVector(left.col(i)), ComplexVector(right.col(i)));
  }
  return out;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes, Index dim_a, Index dim_b, Normalization norm)
    : amps_(std::move(amplitudes)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ < 1 || dim_b_ < 1) fail(ErrorCode::parameter, "local dimensions must be positive");
  if (amps_.size() != dim_a_ * dim_b_) {
    fail(ErrorCode::parameter, "state length " + std::to_string(amps_.size()) +
                                   " does not match dims " + std::to_string(dim_a_) + "x" +
                                   std::to_string(dim_b_));
  }
  if (!is_finite(amps_)) fail(ErrorCode::parameter, "state has non-finite amplitudes");
  const double nrm = amps_.norm();
  switch (norm) {
    case Normalization::require:
      if (std::abs(nrm - 1.0) > kUnitTol) {
        fail(ErrorCode::precondition, "state is not normalized (norm " + std::to_string(nrm) + ")");
      }
      break;
    case Normalization::normalize:
      if (nrm <= kZeroNorm) fail(ErrorCode::degenerate_input, "cannot normalize a zero vector");
      amps_ /= nrm;
      break;
    case Normalization::any:
      break;
  }
}

PureState PureState::product(const ComplexVector& a, const ComplexVector& b, Normalization norm) {
  return {kron(a, b), a.size(), b.size(), norm};
}

ComplexMatrix PureState::coefficient_matrix() const {
  ComplexMatrix c(dim_a_, dim_b_);
  for (Index i = 0; i < dim_a_; ++i)
    for (Index k = 0; k < dim_b_; ++k) c(i, k) = amps_(i * dim_b_ + k);
  return c;
}

BipartiteOperator PureState::projector() const {
  return {outer(amps_, amps_), dim_a_, dim_b_, BipartiteOperator::Hermiticity::symmetrize};
}

ComplexVector SchmidtDecomposition::reconstruct() const {
  return combine(left, right, coeffs);
}

RealVector schmidt_coefficients(const PureState& v) {
  return singular_values(v.coefficient_matrix());
}

SchmidtDecomposition schmidt_decompose(const PureState& v, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) fail(ErrorCode::parameter, "schmidt tolerance must lie in (0, 1)");
  check_nonzero(v, "schmidt_decompose");
  Frame f = full_frame(v);
  Index rank = 0;
  while (rank < f.alpha.size() && f.alpha(rank) > tol * f.alpha(0)) ++rank;
  return {f.alpha.head(rank), f.left.leftCols(rank), f.right.leftCols(rank), tol};
}

Index schmidt_rank(const PureState& v, double tol) { return schmidt_decompose(v, tol).rank(); }

PureState schmidt_truncate(const PureState& v, Index k) {
  check_k(v, k, "schmidt_truncate");
  check_nonzero(v, "schmidt_truncate");
  Frame f = full_frame(v);
  RealVector kept = f.alpha;
  for (Index i = k; i < kept.size(); ++i) kept(i) = 0.0;
  return {combine(f.left, f.right, kept), v.dim_a(), v.dim_b(), PureState::Normalization::normalize};
}

double s_k_norm(const PureState& v, Index k) {
  check_k(v, k, "s_k_norm");
  return k2_norm_values(as_span(schmidt_coefficients(v)), k);
}

double s_k_dual(const PureState& v, Index k) {
  check_k(v, k, "s_k_dual");
  return k2_dual_values(as_span(schmidt_coefficients(v)), k);
}

PureState s_k_dual_vector(const PureState& v, Index k) {
  check_k(v, k, "s_k_dual_vector");
  check_nonzero(v, "s_k_dual_vector");
  Frame f = full_frame(v);
  const BreakIndexResult b = break_index(as_span(f.alpha), k);
  RealVector z = f.alpha;
  for (Index i = b.r; i < z.size(); ++i) z(i) = b.sigma_tilde;
  return {combine(f.left, f.right, z), v.dim_a(), v.dim_b(), PureState::Normalization::normalize};
}

std::vector<WeightedState> s_k_dual_decomposition(const PureState& v, Index k) {
  check_k(v, k, "s_k_dual_decomposition");
  check_nonzero(v, "s_k_dual_decomposition");
  Frame f = full_frame(v);
  const Index len = f.alpha.size();
  const BreakIndexResult b = break_index(as_span(f.alpha), k);
  const Index slots = k - b.r;

  double head_sq = 0.0;
  for (Index i = 0; i < b.r; ++i) head_sq += f.alpha(i) * f.alpha(i);
  const double piece_norm = std::sqrt(head_sq + static_cast<double>(slots) * b.sigma_tilde * b.sigma_tilde);

  auto piece = [&](const std::vector<Index>& subset) {
    RealVector c = RealVector::Zero(len);
    for (Index i = 0; i < b.r; ++i) c(i) = f.alpha(i);
    for (Index i : subset) c(i) = b.sigma_tilde;
    return PureState(combine(f.left, f.right, c) / piece_norm, v.dim_a(), v.dim_b(),
                     PureState::Normalization::normalize);
  };

  std::vector<WeightedState> out;
  if (b.sigma_tilde <= 0.0) {
    out.push_back({piece_norm, piece({})});
    return out;
  }

  // The tail scaled by 1/sigma_tilde lies in the hypersimplex
  // {0 <= x_i <= 1, sum x = slots}; peel off its vertices greedily.
  std::vector<double> x(static_cast<std::size_t>(len - b.r));
  for (Index i = b.r; i < len; ++i) x[i - b.r] = std::min(1.0, f.alpha(i) / b.sigma_tilde);
  std::vector<Index> order(x.size());
  double remaining = 1.0;
  for (std::size_t step = 0; step < 4 * x.size() + 4 && remaining > 1e-14; ++step) {
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index c) { return x[a] > x[c]; });
    double lambda = remaining;
    for (Index j = 0; j < slots; ++j) lambda = std::min(lambda, x[order[j]]);
    if (slots < static_cast<Index>(order.size())) {
      lambda = std::min(lambda, remaining - x[order[slots]]);
    }
    const bool last = lambda <= 1e-15 || remaining - lambda <= 1e-14;
    if (last) lambda = remaining;
    std::vector<Index> subset;
    for (Index j = 0; j < slots; ++j) {
      subset.push_back(b.r + order[j]);
      x[order[j]] = std::max(0.0, x[order[j]] - lambda);
    }
    out.push_back({lambda * piece_norm, piece(subset)});
    remaining -= lambda;
    if (last) break;
  }
  return out;
}

}  // namespace entnorm
