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

#include "entnorm/invariance.hpp"

#include <algorithm>
#include <cmath>

#include "entnorm/dualnorms.hpp"
#include "entnorm/error.hpp"
#include "entnorm/random.hpp"
#include "entnorm/schmidt.hpp"
#include "entnorm/sknorm.hpp"

namespace entnorm {

namespace {

using Norm = PureState::Normalization;

constexpr double kTol = 1e-9;
constexpr double kTransposeTol = 1e-10;

PureState unit_state(Index m, Index n, Rng& rng) {
  return {gaussian_vector(m * n, rng), m, n, Norm::normalize};
}

struct Tracker {
  std::vector<InvarianceCheck> checks;

  void record(const std::string& name, double deviation, double tol) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const InvarianceCheck& c) { return c.name == name; });
    if (it == checks.end()) {
      checks.push_back({name, deviation, tol});
    } else {
      it->max_deviation = std::max(it->max_deviation, deviation);
    }
  }
};

double coeff_deviation(const PureState& a, const PureState& b) {
  return (schmidt_coefficients(a) - schmidt_coefficients(b)).cwiseAbs().maxCoeff();
}

}  // namespace

bool InvarianceReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

InvarianceReport run_invariance_suite(const InvarianceConfig& cfg) {
  const Index m = cfg.dim_a;
  const Index n = cfg.dim_b;
  const Index k = cfg.k;
  if (m < 1 || n < 1) fail(ErrorCode::parameter, "invariance: dimensions must be positive");
  if (k < 1 || k > std::min(m, n)) fail(ErrorCode::parameter, "invariance: k outside [1, min(m, n)]");
  if (cfg.trials < 1) fail(ErrorCode::parameter, "invariance: trials must be >= 1");

  Tracker t;
  const bool square = m == n;
  const BipartiteOperator swap = swap_operator(square ? n : 1);
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const PureState v = unit_state(m, n, rng);
    const PureState w = unit_state(m, n, rng);
    const ComplexMatrix local = kron(haar_unitary(m, rng), haar_unitary(n, rng));
    const ComplexMatrix local2 = kron(haar_unitary(m, rng), haar_unitary(n, rng));
    const PureState uv(local * v.amplitudes(), m, n, Norm::normalize);
    const PureState uw(local2 * w.amplitudes(), m, n, Norm::normalize);

    t.record("schmidt_coefficients/local_unitary", coeff_deviation(v, uv), kTol);
    t.record("sk_pure/local_unitary", std::abs(sk_pure(v, k) - sk_pure(uv, k)), kTol);
    t.record("gamma_pure/local_unitary", std::abs(gamma_pure(v, k) - gamma_pure(uv, k)), kTol);
    t.record("sk_elementary/local_unitary",
             std::abs(sk_elementary(v, w, k) - sk_elementary(uv, uw, k)), kTol);
    t.record("gamma_rank_one/local_unitary",
             std::abs(gamma_rank_one(v, w, k) - gamma_rank_one(uv, uw, k)), kTol);

    if (square) {
      const PureState sv(swap.mat() * v.amplitudes(), m, n, Norm::normalize);
      t.record("schmidt_coefficients/swap", coeff_deviation(v, sv), kTol);
      t.record("sk_pure/swap", std::abs(sk_pure(v, k) - sk_pure(sv, k)), kTol);
      t.record("gamma_pure/swap", std::abs(gamma_pure(v, k) - gamma_pure(sv, k)), kTol);
    }

    // (|v><w|)^T = |conj w><conj v|
    const PureState vbar(v.amplitudes().conjugate(), m, n, Norm::normalize);
    const PureState wbar(w.amplitudes().conjugate(), m, n, Norm::normalize);
    t.record("gamma_rank_one/transpose",
             std::abs(gamma_rank_one(v, w, k) - gamma_rank_one(wbar, vbar, k)), kTol);
    t.record("sk_elementary/transpose",
             std::abs(sk_elementary(v, w, k) - sk_elementary(wbar, vbar, k)), kTol);

    // Elementary product ket-bra |a b><c d| and its partial transpose.
    const PureState ab = PureState::product(gaussian_vector(m, rng).normalized(),
                                            gaussian_vector(n, rng).normalized());
    const PureState cd = PureState::product(gaussian_vector(m, rng).normalized(),
                                            gaussian_vector(n, rng).normalized());
    const BipartiteOperator x(outer(ab.amplitudes(), cd.amplitudes()), m, n,
                              BipartiteOperator::Hermiticity::none);
    const NormInterval after = sk_bounds(partial_transpose(x), k);
    const double exact = sk_elementary(ab, cd, k);
    t.record("sk_elementary/partial_transpose",
             std::max(std::abs(after.lower - exact), std::abs(after.upper - exact)), kTransposeTol);
    if (k == 1) {
      const NormInterval g = gamma_bounds(partial_transpose(x), k, DualOptions{{.restarts = 0}});
      const double ge = gamma_rank_one(ab, cd, k);
      t.record("gamma_rank_one/partial_transpose",
               std::max(std::abs(g.lower - ge), std::abs(g.upper - ge)), kTransposeTol);
    }
  }
  return {cfg, std::move(t.checks)};
}

}  // namespace entnorm
