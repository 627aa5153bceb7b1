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

#include "entnorm/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "entnorm/error.hpp"

namespace entnorm {

namespace {

std::atomic<bool> g_svd_failure{false};

double max_abs(const ComplexMatrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

}  // namespace

namespace testing {
void inject_svd_failure(bool enabled) noexcept { g_svd_failure = enabled; }
}  // namespace testing

bool is_finite(const ComplexMatrix& x) {
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index i = 0; i < x.rows(); ++i) {
      if (!std::isfinite(x(i, j).real()) || !std::isfinite(x(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& x, double rel_tol) {
  if (x.rows() != x.cols()) return false;
  const double scale = std::max(1.0, max_abs(x));
  return max_abs(x - x.adjoint()) <= rel_tol * scale;
}

BipartiteOperator::BipartiteOperator(ComplexMatrix mat, Index dim_a, Index dim_b,
                                     Hermiticity herm)
    : mat_(std::move(mat)), dim_a_(dim_a), dim_b_(dim_b), hermitian_(false) {
  if (dim_a_ < 1 || dim_b_ < 1) {
    fail(ErrorCode::parameter, "local dimensions must be positive");
  }
  if (mat_.rows() != dim_a_ * dim_b_ || mat_.cols() != dim_a_ * dim_b_) {
    fail(ErrorCode::parameter,
         "operator must be square with side " + std::to_string(dim_a_ * dim_b_) +
             ", got " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
  }
  if (!is_finite(mat_)) {
    fail(ErrorCode::parameter, "operator has non-finite entries");
  }
  switch (herm) {
    case Hermiticity::none:
      break;
    case Hermiticity::require:
      if (!is_hermitian(mat_)) fail(ErrorCode::precondition, "operator is not Hermitian");
      hermitian_ = true;
      break;
    case Hermiticity::symmetrize:
      mat_ = (0.5 * (mat_ + mat_.adjoint())).eval();
      hermitian_ = true;
      break;
    case Hermiticity::detect:
      hermitian_ = is_hermitian(mat_);
      break;
  }
}

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > kMaxSide || cols > kMaxSide) {
    fail(ErrorCode::size, "kron result " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " exceeds the side cap");
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const BipartiteOperator& x, Factor which) {
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  const auto& mat = x.mat();
  if (which == Factor::B) {
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j)
        for (Index k = 0; k < n; ++k) out(i, j) += mat(i * n + k, j * n + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l)
      for (Index i = 0; i < m; ++i) out(k, l) += mat(i * n + k, i * n + l);
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& x) {
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  const auto& mat = x.mat();
  ComplexMatrix out(x.side(), x.side());
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) out(i * n + k, j * n + l) = mat(i * n + l, j * n + k);
  return {std::move(out), m, n,
          x.hermitian() ? BipartiteOperator::Hermiticity::require
                        : BipartiteOperator::Hermiticity::none};
}

BipartiteOperator swap_operator(Index n) {
  if (n < 1) fail(ErrorCode::parameter, "swap_operator needs n >= 1");
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
  return {std::move(s), n, n, BipartiteOperator::Hermiticity::require};
}

ComplexMatrix realign(const BipartiteOperator& x) {
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  const auto& mat = x.mat();
  ComplexMatrix out(m * m, n * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) out(i * m + j, k * n + l) = mat(i * n + k, j * n + l);
  return out;
}

BipartiteOperator unrealign(const ComplexMatrix& l, Index dim_a, Index dim_b) {
  const Index m = dim_a;
  const Index n = dim_b;
  if (l.rows() != m * m || l.cols() != n * n) {
    fail(ErrorCode::parameter, "unrealign: shape does not match local dimensions");
  }
  ComplexMatrix out(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index q = 0; q < n; ++q) out(i * n + k, j * n + q) = l(i * m + j, k * n + q);
  return {std::move(out), m, n};
}

SvdResult svd(const ComplexMatrix& x) {
  if (g_svd_failure) fail(ErrorCode::numerical, "svd did not converge (injected failure)");
  if (!is_finite(x)) fail(ErrorCode::numerical, "svd input has non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> solver(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) fail(ErrorCode::numerical, "svd did not converge");
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& x) {
  if (g_svd_failure) fail(ErrorCode::numerical, "svd did not converge (injected failure)");
  if (!is_finite(x)) fail(ErrorCode::numerical, "svd input has non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> solver(x);
  if (solver.info() != Eigen::Success) fail(ErrorCode::numerical, "svd did not converge");
  return solver.singularValues();
}

EigResult eig_hermitian(const ComplexMatrix& x) {
  if (!is_hermitian(x)) fail(ErrorCode::precondition, "eig_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x);
  if (solver.info() != Eigen::Success) fail(ErrorCode::numerical, "eigensolver did not converge");
  // Eigen returns ascending order.
  const Index n = x.rows();
  EigResult out{RealVector(n), ComplexMatrix(n, n)};
  for (Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

MatrixNorms matrix_norms(const ComplexMatrix& x) {
  const RealVector s = singular_values(x);
  if (s.size() == 0) return {0.0, 0.0, 0.0};
  return {s(0), s.sum(), s.norm()};
}

double operator_norm(const ComplexMatrix& x) { return matrix_norms(x).op; }
double trace_norm(const ComplexMatrix& x) { return matrix_norms(x).trace; }

ComplexMatrix outer(const ComplexVector& v, const ComplexVector& w) {
  return v * w.adjoint();
}

}  // namespace entnorm
