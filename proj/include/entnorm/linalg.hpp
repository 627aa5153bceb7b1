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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace entnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Factor { A, B };

/// Relative tolerance for the Hermitian flag: max|X - X^dagger| <= tol * max(1, max|X|).
inline constexpr double kHermitianTol = 1e-10;

/// Largest matrix side produced by kron().
inline constexpr Index kMaxSide = 4096;

/// An operator on C^m (x) C^n.
///
/// Composite indices pair as (i, k) -> i * n + k everywhere in the library:
/// the basis vector |i>|k> sits at position i * n + k. Instances are
/// immutable after construction.
class BipartiteOperator {
 public:
  enum class Hermiticity {
    none,        // no claim; flag is cleared
    require,     // throw unless Hermitian within kHermitianTol
    symmetrize,  // replace the matrix by (X + X^dagger) / 2 and set the flag
    detect,      // set the flag iff the matrix is Hermitian within tolerance
  };

  BipartiteOperator(ComplexMatrix mat, Index dim_a, Index dim_b,
                    Hermiticity herm = Hermiticity::detect);

  const ComplexMatrix& mat() const noexcept { return mat_; }
  Index dim_a() const noexcept { return dim_a_; }
  Index dim_b() const noexcept { return dim_b_; }
  Index side() const noexcept { return dim_a_ * dim_b_; }
  Index min_dim() const noexcept { return dim_a_ < dim_b_ ? dim_a_ : dim_b_; }
  bool hermitian() const noexcept { return hermitian_; }

 private:
  ComplexMatrix mat_;
  Index dim_a_;
  Index dim_b_;
  bool hermitian_;
};

struct SvdResult {
  ComplexMatrix left;    // columns are left singular vectors
  RealVector sigma;      // descending, nonnegative
  ComplexMatrix right;   // columns are right singular vectors; x = left * diag(sigma) * right^dagger
};

struct EigResult {
  RealVector values;     // descending
  ComplexMatrix vectors; // columns, orthonormal
};

struct MatrixNorms {
  double op;
  double trace;
  double frobenius;
};

bool is_finite(const ComplexMatrix& x);
bool is_hermitian(const ComplexMatrix& x, double rel_tol = kHermitianTol);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix partial_trace(const BipartiteOperator& x, Factor which);
BipartiteOperator partial_transpose(const BipartiteOperator& x);

/// S with S (a (x) b) = b (x) a on C^n (x) C^n.
BipartiteOperator swap_operator(Index n);

/// Reshuffle L(x)[(i,j),(k,l)] = x[(i,k),(j,l)]; result is m^2 x n^2.
ComplexMatrix realign(const BipartiteOperator& x);
/// Inverse reshuffle of realign() for the given local dimensions.
BipartiteOperator unrealign(const ComplexMatrix& l, Index dim_a, Index dim_b);

/// Thin SVD. Throws ErrorCode::numerical on breakdown.
SvdResult svd(const ComplexMatrix& x);
RealVector singular_values(const ComplexMatrix& x);

/// Throws ErrorCode::precondition if x is not Hermitian within tolerance.
EigResult eig_hermitian(const ComplexMatrix& x);

MatrixNorms matrix_norms(const ComplexMatrix& x);
double operator_norm(const ComplexMatrix& x);
double trace_norm(const ComplexMatrix& x);

/// |v><w|
ComplexMatrix outer(const ComplexVector& v, const ComplexVector& w);

namespace testing {
/// Makes every subsequent svd() call fail with ErrorCode::numerical until
/// reset. Exists so callers can exercise the numerical-failure path.
void inject_svd_failure(bool enabled) noexcept;
}  // namespace testing

}  // namespace entnorm
