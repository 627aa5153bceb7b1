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

#include "entnorm/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entnorm/error.hpp"
#include "entnorm/kyfan.hpp"

namespace entnorm {

namespace {

constexpr double kSupportTol = 1e-12;

void check_k(const BipartiteOperator& x, Index k, const char* what) {
  if (k < 1 || k > x.min_dim()) {
    fail(ErrorCode::parameter, std::string(what) + ": k=" + std::to_string(k) +
                                   " outside [1, " + std::to_string(x.min_dim()) + "]");
  }
}

struct Whitening {
  ComplexMatrix inv_sqrt;  // pseudo-inverse square root on the support
  double deviation;        // || marginal / tr - P / rank ||_F
};

Whitening whiten(const ComplexMatrix& marginal) {
  const ComplexMatrix herm = 0.5 * (marginal + marginal.adjoint());
  const EigResult e = eig_hermitian(herm);
  const double top = e.values(0);
  const double total = herm.trace().real();
  Index rank = 0;
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) > kSupportTol * top) ++rank;
  }
  const Index d = marginal.rows();
  ComplexMatrix inv_sqrt = ComplexMatrix::Zero(d, d);
  ComplexMatrix flat = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < rank; ++i) {
    const ComplexVector u = e.vectors.col(i);
    inv_sqrt += (1.0 / std::sqrt(e.values(i))) * u * u.adjoint();
    flat += (1.0 / static_cast<double>(rank)) * u * u.adjoint();
  }
  return {inv_sqrt, (herm / total - flat).norm()};
}

double marginal_deviation(const BipartiteOperator& rho) {
  return std::max(whiten(partial_trace(rho, Factor::B)).deviation,
                  whiten(partial_trace(rho, Factor::A)).deviation);
}

}  // namespace

void require_density(const BipartiteOperator& rho, double tol) {
  if (!rho.hermitian() && !is_hermitian(rho.mat())) {
    fail(ErrorCode::precondition, "density matrix must be Hermitian");
  }
  const double tr = rho.mat().trace().real();
  if (std::abs(tr - 1.0) > tol) {
    fail(ErrorCode::precondition, "density matrix must have unit trace (trace " + std::to_string(tr) + ")");
  }
  const EigResult e = eig_hermitian(0.5 * (rho.mat() + rho.mat().adjoint()));
  if (e.values(e.values.size() - 1) < -tol) {
    fail(ErrorCode::precondition, "density matrix must be positive semidefinite");
  }
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::gen_realign: return "gen_realign";
    case Criterion::weak_realign: return "weak_realign";
    case Criterion::cross_norm: return "cross_norm";
  }
  return "unknown";
}

const char* to_string(SchmidtRankVerdict v) noexcept {
  return v == SchmidtRankVerdict::sr_at_most_k ? "sr_at_most_k" : "sr_exceeds_k";
}

double realignment_value(const BipartiteOperator& rho, Index k) {
  check_k(rho, k, "realignment_value");
  return k2_dual(realign(rho), k * k);
}

DetectionReport detect_schmidt_number(const BipartiteOperator& rho, Index k, bool use_filter,
                                      double tol) {
  check_k(rho, k, "detect_schmidt_number");
  require_density(rho);
  const double plain = realignment_value(rho, k);
  DetectionReport out{Criterion::gen_realign, k, plain, 1.0, false, false, tol, plain,
                      std::nullopt, std::nullopt};
  if (use_filter) {
    // A failed filter never blocks detection; the unfiltered path stands.
    try {
      const FilterResult f = local_filter(rho);
      const double filtered = realignment_value(f.rho, k);
      out.filtered_value = filtered;
      out.filter_converged = f.converged;
      if (filtered > out.value) {
        out.value = filtered;
        out.filtered = true;
      }
    } catch (const Error&) {
      out.filter_converged = false;
    }
  }
  out.detected = out.value > out.threshold + tol;
  return out;
}

DetectionReport weak_realignment(const BipartiteOperator& rho, Index k, double tol) {
  check_k(rho, k, "weak_realignment");
  require_density(rho);
  const double value = trace_norm(realign(rho));
  const double threshold = static_cast<double>(k);
  return {Criterion::weak_realign, k, value, threshold, value > threshold + tol, false, tol,
          value, std::nullopt, std::nullopt};
}

PureStateTest pure_state_sr_test(const PureState& v, Index k, double tol) {
  if (v.norm() <= 1e-12) fail(ErrorCode::degenerate_input, "pure_state_sr_test: zero vector");
  const PureState unit(v.amplitudes(), v.dim_a(), v.dim_b(), PureState::Normalization::normalize);
  const double value = realignment_value(unit.projector(), k);
  return {value <= 1.0 + tol ? SchmidtRankVerdict::sr_at_most_k : SchmidtRankVerdict::sr_exceeds_k,
          value};
}

FilterResult local_filter(const BipartiteOperator& rho, double tol, Index max_iter) {
  require_density(rho);
  const Index m = rho.dim_a();
  const Index n = rho.dim_b();
  ComplexMatrix state = rho.mat();
  ComplexMatrix f_a = ComplexMatrix::Identity(m, m);
  ComplexMatrix f_b = ComplexMatrix::Identity(n, n);
  const ComplexMatrix id_a = ComplexMatrix::Identity(m, m);
  const ComplexMatrix id_b = ComplexMatrix::Identity(n, n);

  auto current = [&] {
    return BipartiteOperator(state, m, n, BipartiteOperator::Hermiticity::symmetrize);
  };

  double dev = marginal_deviation(current());
  Index it = 0;
  while (dev > tol && it < max_iter) {
    ++it;
    const Whitening wa = whiten(partial_trace(current(), Factor::B));
    ComplexMatrix la = kron(wa.inv_sqrt, id_b);
    state = la * state * la.adjoint();
    state /= state.trace().real();
    f_a = wa.inv_sqrt * f_a;

    const Whitening wb = whiten(partial_trace(current(), Factor::A));
    ComplexMatrix lb = kron(id_a, wb.inv_sqrt);
    state = lb * state * lb.adjoint();
    state /= state.trace().real();
    f_b = wb.inv_sqrt * f_b;

    dev = marginal_deviation(current());
  }
  return {current(), f_a, f_b, dev <= tol, it, dev};
}

}  // namespace entnorm
