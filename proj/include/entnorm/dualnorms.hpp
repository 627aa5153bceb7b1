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
#include "entnorm/sknorm.hpp"

namespace entnorm {

/// An operator W with a certified upper bound on its primal-side norm
/// (||W||_{S(k)} for gamma witnesses, r_k(W) for robustness witnesses).
/// pairing / norm_upper is a lower bound on the dual norm of the target.
struct Witness {
  ComplexMatrix w;
  double norm_upper = 0.0;
  double pairing = 0.0;  // |<W, X>|
  Index k = 1;
  std::string kind;

  double value() const noexcept { return norm_upper > 0.0 ? pairing / norm_upper : 0.0; }
};

/// X ~ sum_i coefficients[i] |v_i><w_i| with every v_i, w_i unit and SR <= k.
struct Decomposition {
  std::vector<double> coefficients;
  std::vector<std::pair<PureState, PureState>> generators;
  double residual = 0.0;  // Frobenius norm of X minus the sum

  double mass() const;
  ComplexMatrix assemble(Index side) const;
};

/// ||v><v||_{gamma,k} = s_k_dual(v, k)^2.
double gamma_pure(const PureState& v, Index k);
/// ||v><w||_{gamma,k} = s_k_dual(v, k) * s_k_dual(w, k).
double gamma_rank_one(const PureState& v, const PureState& w, Index k);

/// Exact-mass decomposition of |v><w| built from the dual-attaining vector
/// decompositions of v and w.
Decomposition rank_one_decomposition(const PureState& v, const PureState& w, Index k);

struct DualOptions {
  SeeSawOptions seesaw;
  /// When positive, gamma_bounds also runs decomposition_oracle with this many
  /// random generators.
  Index oracle_budget = 0;
};

/// Witnesses for ||X||_{gamma,k}, best first.
std::vector<Witness> gamma_witnesses(const BipartiteOperator& x, Index k,
                                     const DualOptions& opts = {});

struct GammaEstimate {
  NormInterval interval;
  std::optional<Witness> witness;
  std::optional<Decomposition> decomposition;
};

GammaEstimate gamma_estimate(const BipartiteOperator& x, Index k, const DualOptions& opts = {});
NormInterval gamma_bounds(const BipartiteOperator& x, Index k, const DualOptions& opts = {});

struct OracleResult {
  double upper;  // certified: LP mass plus the entrywise l1 norm of the residual
  Decomposition decomposition;
  Index generators_tried;
  Index lp_iterations;
};

/// Upper bound on ||X||_{gamma,k} from the linear program
///   min sum c_i  s.t.  sum c_i G_i = X,  c_i >= 0
/// over `budget` random phased Schmidt-rank-k ket-bras plus the exact-mass
/// generators of X's singular value decomposition.
OracleResult decomposition_oracle(const BipartiteOperator& x, Index k, Index budget,
                                  std::uint64_t seed);

/// Hermitian witnesses for R_k(Y), best first.
std::vector<Witness> robustness_witnesses(const BipartiteOperator& y, Index k);

/// Convex-mixture evidence: y = sum weight_i |v_i><v_i| with SR(v_i) <= k.
using Mixture = std::vector<WeightedState>;

struct RobustnessEstimate {
  NormInterval interval;
  std::optional<Witness> witness;
};

RobustnessEstimate robustness_estimate(const BipartiteOperator& y, Index k,
                                       const DualOptions& opts = {},
                                       const Mixture* mixture = nullptr);
NormInterval robustness_bounds(const BipartiteOperator& y, Index k, const DualOptions& opts = {},
                               const Mixture* mixture = nullptr);

/// For density matrices R_k = 2 E + 1; maps an R_k interval to one on E.
NormInterval generalized_robustness(const NormInterval& robustness);

struct ConjectureReport {
  Index k;
  bool open_regime;     // 1 < k < min(m, n)
  double candidate;     // 2 * gamma_pure(v, k) - 1
  NormInterval robustness;
  bool candidate_inside;
  double gap;           // robustness.upper - robustness.lower
};

ConjectureReport conjecture_probe(const PureState& v, Index k, const DualOptions& opts = {});

enum class SchmidtNumberVerdict { at_most_k, exceeds_k, undecided };
const char* to_string(SchmidtNumberVerdict verdict) noexcept;

struct SchmidtNumberCertificate {
  SchmidtNumberVerdict verdict;
  NormInterval gamma;
  double realignment = 0.0;  // best (filtered or not) generalized realignment value
  std::optional<Decomposition> decomposition;
  std::optional<Witness> witness;
  std::string evidence;  // method that decided
};

struct CertifyOptions {
  DualOptions dual;
  double tol = 1e-7;
  bool use_filter = true;
};

/// Three-way Schmidt number test through ||rho||_{gamma,k} = 1 <=> SN(rho) <= k.
SchmidtNumberCertificate sn_certify(const BipartiteOperator& rho, Index k,
                                    const CertifyOptions& opts = {},
                                    const Mixture* mixture = nullptr);

}  // namespace entnorm
