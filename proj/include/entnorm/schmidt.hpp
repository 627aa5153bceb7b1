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

#include <vector>

#include "entnorm/linalg.hpp"

namespace entnorm {

/// A vector in C^m (x) C^n, amplitude of |i>|k> at i * n + k.
class PureState {
 public:
  enum class Normalization {
    require,    // throw unless ||v|| = 1 within 1e-10
    normalize,  // rescale to unit norm
    any,        // accept as is (norm operations are homogeneous)
  };

  PureState(ComplexVector amplitudes, Index dim_a, Index dim_b,
            Normalization norm = Normalization::require);

  /// |a> (x) |b>
  static PureState product(const ComplexVector& a, const ComplexVector& b,
                           Normalization norm = Normalization::require);

  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Index dim_a() const noexcept { return dim_a_; }
  Index dim_b() const noexcept { return dim_b_; }
  Index min_dim() const noexcept { return dim_a_ < dim_b_ ? dim_a_ : dim_b_; }
  double norm() const { return amps_.norm(); }

  /// The m x n coefficient matrix C with C(i, k) = amplitude of |i>|k>.
  ComplexMatrix coefficient_matrix() const;
  /// |v><v| as an operator on the same bipartition.
  BipartiteOperator projector() const;

 private:
  ComplexVector amps_;
  Index dim_a_;
  Index dim_b_;
};

/// v = sum_i coeffs(i) * left.col(i) (x) right.col(i)
struct SchmidtDecomposition {
  RealVector coeffs;    // descending, all > tol * coeffs(0)
  ComplexMatrix left;   // m x rank, orthonormal columns
  ComplexMatrix right;  // n x rank, orthonormal columns
  double tol;

  Index rank() const noexcept { return coeffs.size(); }
  ComplexVector reconstruct() const;
};

inline constexpr double kSchmidtTol = 1e-10;

/// All min(m, n) singular values of the coefficient matrix, descending.
RealVector schmidt_coefficients(const PureState& v);

SchmidtDecomposition schmidt_decompose(const PureState& v, double tol = kSchmidtTol);
Index schmidt_rank(const PureState& v, double tol = kSchmidtTol);

/// Best Schmidt-rank-k approximation, renormalized to unit length.
PureState schmidt_truncate(const PureState& v, Index k);

/// sup |<u|v>| over unit u with SR(u) <= k.
double s_k_norm(const PureState& v, Index k);
/// Dual of s_k_norm.
double s_k_dual(const PureState& v, Index k);

/// Unit vector z maximizing |<z|v>| / s_k_norm(z, k), in the Schmidt frame of
/// v; the ratio equals s_k_dual(v, k).
PureState s_k_dual_vector(const PureState& v, Index k);

struct WeightedState {
  double weight;
  PureState state;
};

/// v = sum_j weight_j * state_j with every state unit and SR <= k, and
/// sum_j weight_j = s_k_dual(v, k): a decomposition attaining the dual norm.
std::vector<WeightedState> s_k_dual_decomposition(const PureState& v, Index k);

}  // namespace entnorm
