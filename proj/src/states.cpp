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

#include "entnorm/states.hpp"

#include <cmath>
#include <string>

#include "entnorm/error.hpp"
#include "entnorm/random.hpp"

namespace entnorm {

namespace {

using Norm = PureState::Normalization;

constexpr std::pair<EnsembleKind, const char*> kNames[] = {
    {EnsembleKind::haar_pure, "haar_pure"},
    {EnsembleKind::max_entangled, "max_entangled"},
    {EnsembleKind::isotropic, "isotropic"},
    {EnsembleKind::sr_bounded_pure, "sr_bounded_pure"},
    {EnsembleKind::sn_bounded_density, "sn_bounded_density"},
    {EnsembleKind::ginibre_density, "ginibre_density"},
};

PureState sr_state(Index m, Index n, Index k, Rng& rng) {
  const ComplexMatrix a = haar_isometry(m, k, rng);
  const ComplexMatrix b = haar_isometry(n, k, rng);
  const ComplexVector g = gaussian_vector(k, rng);
  ComplexVector v = ComplexVector::Zero(m * n);
  for (Index i = 0; i < k; ++i) v += g(i) * kron(ComplexVector(a.col(i)), ComplexVector(b.col(i)));
  return {v, m, n, Norm::normalize};
}

}  // namespace

const char* to_string(EnsembleKind kind) noexcept {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

EnsembleKind ensemble_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  fail(ErrorCode::parameter, "unknown ensemble kind '" + name + "'");
}

void validate(const EnsembleSpec& spec) {
  if (spec.dim_a < 1 || spec.dim_b < 1) fail(ErrorCode::parameter, "dimensions must be positive");
  const Index min_dim = std::min(spec.dim_a, spec.dim_b);
  switch (spec.kind) {
    case EnsembleKind::haar_pure:
    case EnsembleKind::max_entangled:
      break;
    case EnsembleKind::isotropic:
      if (spec.dim_a != spec.dim_b) fail(ErrorCode::parameter, "isotropic needs m == n");
      if (!spec.p || *spec.p < 0.0 || *spec.p > 1.0) {
        fail(ErrorCode::parameter, "isotropic needs p in [0, 1]");
      }
      break;
    case EnsembleKind::sr_bounded_pure:
    case EnsembleKind::sn_bounded_density:
      if (!spec.k || *spec.k < 1 || *spec.k > min_dim) {
        fail(ErrorCode::parameter, "k must lie in [1, min(m, n)]");
      }
      if (spec.terms && *spec.terms < 1) fail(ErrorCode::parameter, "terms must be >= 1");
      break;
    case EnsembleKind::ginibre_density:
      if (spec.rank && (*spec.rank < 1 || *spec.rank > spec.dim_a * spec.dim_b)) {
        fail(ErrorCode::parameter, "rank must lie in [1, m * n]");
      }
      break;
  }
}

BipartiteOperator Generated::density() const {
  if (is_pure()) return pure().projector();
  return op();
}

PureState max_entangled(Index dim_a, Index dim_b) {
  const Index d = std::min(dim_a, dim_b);
  ComplexVector v = ComplexVector::Zero(dim_a * dim_b);
  for (Index i = 0; i < d; ++i) v(i * dim_b + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return {v, dim_a, dim_b, Norm::normalize};
}

PureState random_sr_state(Index dim_a, Index dim_b, Index k, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::sr_bounded_pure;
  spec.dim_a = dim_a;
  spec.dim_b = dim_b;
  spec.k = k;
  spec.seed = seed;
  return generate(spec).pure();
}

Generated generate(const EnsembleSpec& spec) {
  validate(spec);
  const Index m = spec.dim_a;
  const Index n = spec.dim_b;
  const Index side = m * n;
  Rng rng = make_rng(spec.seed);
  const auto density = [&](ComplexMatrix rho) {
    rho /= rho.trace().real();
    return BipartiteOperator(std::move(rho), m, n, BipartiteOperator::Hermiticity::symmetrize);
  };

  switch (spec.kind) {
    case EnsembleKind::haar_pure:
      return {PureState(gaussian_vector(side, rng), m, n, Norm::normalize), {}};
    case EnsembleKind::max_entangled:
      return {max_entangled(m, n), {}};
    case EnsembleKind::isotropic: {
      const PureState phi = max_entangled(m, n);
      const double p = *spec.p;
      ComplexMatrix rho = p * outer(phi.amplitudes(), phi.amplitudes()) +
                          ((1.0 - p) / static_cast<double>(side)) * ComplexMatrix::Identity(side, side);
      return {density(std::move(rho)), {}};
    }
    case EnsembleKind::sr_bounded_pure:
      return {sr_state(m, n, *spec.k, rng), {}};
    case EnsembleKind::sn_bounded_density: {
      const Index terms = spec.terms.value_or(2 * side);
      std::exponential_distribution<double> expo(1.0);
      std::vector<WeightedState> mix;
      double total = 0.0;
      for (Index t = 0; t < terms; ++t) {
        const double w = expo(rng);
        mix.push_back({w, sr_state(m, n, *spec.k, rng)});
        total += w;
      }
      ComplexMatrix rho = ComplexMatrix::Zero(side, side);
      for (auto& term : mix) {
        term.weight /= total;
        rho += term.weight * outer(term.state.amplitudes(), term.state.amplitudes());
      }
      return {density(std::move(rho)), std::move(mix)};
    }
    case EnsembleKind::ginibre_density: {
      const ComplexMatrix g = gaussian_matrix(side, spec.rank.value_or(side), rng);
      return {density(g * g.adjoint()), {}};
    }
  }
  fail(ErrorCode::parameter, "unhandled ensemble kind");
}

}  // namespace entnorm
