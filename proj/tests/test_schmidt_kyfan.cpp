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

#include <doctest.h>

#include <cmath>

#include "entnorm/error.hpp"
#include "entnorm/kyfan.hpp"
#include "entnorm/random.hpp"
#include "entnorm/schmidt.hpp"
#include "entnorm/states.hpp"
#include "oracles.hpp"

using namespace entnorm;

namespace {

PureState diag_state(std::initializer_list<double> alpha, Index n) {
  ComplexVector v = ComplexVector::Zero(n * n);
  Index i = 0;
  for (double a : alpha) {
    v(i * n + i) = a;
    ++i;
  }
  return PureState(v, n, n, PureState::Normalization::normalize);
}

std::span<const double> span_of(const std::vector<double>& v) { return {v.data(), v.size()}; }

PureState random_state(Index m, Index n, Rng& rng) {
  return PureState(gaussian_vector(m * n, rng), m, n, PureState::Normalization::normalize);
}

}  // namespace

TEST_CASE("schmidt decomposition examples") {
  CHECK(schmidt_coefficients(diag_state({1.0}, 2)).isApprox((RealVector(1) << 1).finished()));
  const RealVector bell = schmidt_coefficients(max_entangled(2, 2));
  CHECK(bell(0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(bell(1) == doctest::Approx(1 / std::sqrt(2.0)));
  const RealVector a = schmidt_coefficients(diag_state({std::sqrt(0.7), std::sqrt(0.3)}, 2));
  CHECK(a(0) == doctest::Approx(std::sqrt(0.7)));
  CHECK(a(1) == doctest::Approx(std::sqrt(0.3)));

  Rng rng = make_rng(11);
  const PureState v = random_state(3, 4, rng);
  const SchmidtDecomposition d = schmidt_decompose(v);
  CHECK((d.reconstruct() - v.amplitudes()).norm() < 1e-12);
  CHECK(d.coeffs.squaredNorm() == doctest::Approx(1.0));

  CHECK_THROWS_AS(schmidt_decompose(PureState(ComplexVector::Zero(4), 2, 2, PureState::Normalization::any)), Error);
}

TEST_CASE("schmidt rank") {
  Rng rng = make_rng(12);
  const ComplexVector a = gaussian_vector(3, rng).normalized();
  const ComplexVector b = gaussian_vector(4, rng).normalized();
  CHECK(schmidt_rank(PureState::product(a, b)) == 1);
  for (Index n = 2; n <= 4; ++n) CHECK(schmidt_rank(max_entangled(n, n)) == n);
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(schmidt_rank(random_sr_state(4, 4, 2, s)) == 2);
  try {
    schmidt_rank(PureState(ComplexVector::Zero(4), 2, 2, PureState::Normalization::any));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_input);
  }
}

TEST_CASE("schmidt truncation") {
  const PureState sr2 = random_sr_state(3, 3, 2, 5);
  CHECK(std::abs(sr2.amplitudes().dot(schmidt_truncate(sr2, 2).amplitudes())) == doctest::Approx(1.0));
  CHECK(std::abs(max_entangled(4, 4).amplitudes().dot(schmidt_truncate(max_entangled(4, 4), 2).amplitudes())) ==
        doctest::Approx(std::sqrt(0.5)));
  const PureState v = diag_state({std::sqrt(0.7), std::sqrt(0.3)}, 2);
  CHECK(std::abs(v.amplitudes().dot(schmidt_truncate(v, 1).amplitudes())) == doctest::Approx(std::sqrt(0.7)));
}

TEST_CASE("s_k norm and dual examples") {
  Rng rng = make_rng(13);
  const PureState v = random_state(3, 3, rng);
  CHECK(s_k_norm(v, 3) == doctest::Approx(1.0));
  for (Index n = 2; n <= 4; ++n) {
    for (Index k = 1; k <= n; ++k) {
      CHECK(s_k_norm(max_entangled(n, n), k) == doctest::Approx(std::sqrt(double(k) / n)));
      CHECK(s_k_dual(max_entangled(n, n), k) == doctest::Approx(std::sqrt(double(n) / k)));
    }
  }
  const RealVector alpha = schmidt_coefficients(v);
  CHECK(s_k_dual(v, 1) == doctest::Approx(alpha.sum()));
  CHECK_THROWS_AS(s_k_norm(v, 0), Error);
  CHECK_THROWS_AS(s_k_dual(v, 4), Error);
}

TEST_CASE("s_k norm of (sqrt .7, sqrt .3) against a product-state grid") {
  const PureState v = diag_state({std::sqrt(0.7), std::sqrt(0.3)}, 2);
  const double grid = oracle::product_overlap_grid(v.amplitudes());
  CHECK(s_k_norm(v, 1) == doctest::Approx(std::sqrt(0.7)).epsilon(1e-14));
  // The closed form is a supremum: never below a sampled value, and the grid gets close.
  CHECK(s_k_norm(v, 1) >= grid - 1e-12);
  CHECK(s_k_norm(v, 1) - grid < 1e-4);
}

TEST_CASE("s_k dual against the atomic decomposition LP") {
  Rng rng = make_rng(14);
  auto product_atoms = [&](Index m, Index n, int count) {
    std::vector<ComplexVector> atoms;
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) {
        ComplexVector e = ComplexVector::Zero(m * n);
        e(i * n + j) = 1.0;
        atoms.push_back(e);
      }
    for (int t = 0; t < count; ++t) {
      atoms.push_back(kron(ComplexVector(gaussian_vector(m, rng).normalized()),
                           ComplexVector(gaussian_vector(n, rng).normalized())));
    }
    return atoms;
  };

  const PureState v = diag_state({std::sqrt(0.7), std::sqrt(0.3)}, 2);
  const double lp = oracle::atomic_lp(v.amplitudes(), product_atoms(2, 2, 100));
  CHECK(s_k_dual(v, 1) == doctest::Approx(std::sqrt(0.7) + std::sqrt(0.3)).epsilon(1e-14));
  CHECK(std::abs(lp - s_k_dual(v, 1)) < 1e-8);

  // On generic states the sampled atoms only give an upper bound; it must
  // never undercut the closed form.
  for (int t = 0; t < 5; ++t) {
    const PureState w = random_state(2, 3, rng);
    const double ub = oracle::atomic_lp(w.amplitudes(), product_atoms(2, 3, 300));
    CHECK(ub >= s_k_dual(w, 1) - 1e-9);
    CHECK(ub <= s_k_dual(w, 1) * 1.25);
  }
}

TEST_CASE("s_k dual vector and decomposition") {
  Rng rng = make_rng(15);
  for (int t = 0; t < 20; ++t) {
    const PureState v = random_state(3, 4, rng);
    for (Index k = 1; k <= 3; ++k) {
      const PureState z = s_k_dual_vector(v, k);
      // Pairing over the primal norm of the unit dual vector certifies the dual value.
      CHECK(z.norm() == doctest::Approx(1.0));
      CHECK(std::abs(z.amplitudes().dot(v.amplitudes())) / s_k_norm(z, k) ==
            doctest::Approx(s_k_dual(v, k)).epsilon(1e-10));

      const auto terms = s_k_dual_decomposition(v, k);
      ComplexVector sum = ComplexVector::Zero(12);
      double mass = 0.0;
      for (const WeightedState& term : terms) {
        CHECK(term.weight >= 0.0);
        CHECK(schmidt_rank(term.state) <= k);
        CHECK(term.state.norm() == doctest::Approx(1.0));
        sum += term.weight * term.state.amplitudes();
        mass += term.weight;
      }
      CHECK((sum - v.amplitudes()).norm() < 1e-10);
      CHECK(mass == doctest::Approx(s_k_dual(v, k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("schmidt properties on random states") {
  Rng rng = make_rng(16);
  for (int t = 0; t < 30; ++t) {
    const PureState v = random_state(3, 4, rng);
    const RealVector alpha = schmidt_coefficients(v);
    const ComplexMatrix u = haar_unitary(3, rng);
    const ComplexMatrix w = haar_unitary(4, rng);
    const PureState rotated(kron(u, w) * v.amplitudes(), 3, 4);
    CHECK((schmidt_coefficients(rotated) - alpha).cwiseAbs().maxCoeff() <= 1e-9);

    double prev_norm = 0.0, prev_dual = INFINITY;
    for (Index k = 1; k <= 3; ++k) {
      const double sn = s_k_norm(v, k), sd = s_k_dual(v, k);
      CHECK(sn * sd >= 1.0 - 1e-9);
      CHECK(sn >= prev_norm - 1e-15);
      CHECK(sd <= prev_dual + 1e-15);
      prev_norm = sn;
      prev_dual = sd;
      CHECK(std::abs(std::abs(schmidt_truncate(v, k).amplitudes().dot(v.amplitudes())) - sn) < 1e-10);
    }
    // Homogeneity on unnormalized input.
    const PureState scaled(3.0 * v.amplitudes(), 3, 4, PureState::Normalization::any);
    CHECK(s_k_norm(scaled, 2) == doctest::Approx(3.0 * s_k_norm(v, 2)));
  }
  // Flat profile saturates the pairing.
  CHECK(s_k_norm(max_entangled(3, 3), 2) * s_k_dual(max_entangled(3, 3), 2) == doctest::Approx(1.0));
}

TEST_CASE("break index") {
  const std::vector<double> s1{3, 2, 1};
  const BreakIndexResult k1 = break_index(span_of(s1), 1);
  CHECK(k1.r == 0);
  CHECK(k1.sigma_tilde == doctest::Approx(6.0));

  const std::vector<double> s2{3, 1};
  const BreakIndexResult r2 = break_index(span_of(s2), 2);
  CHECK(r2.r == 1);
  CHECK(r2.sigma_tilde == doctest::Approx(1.0));

  const std::vector<double> s3{1, 1, 1, 1};
  const BreakIndexResult r3 = break_index(span_of(s3), 2);
  CHECK(r3.r == 0);
  CHECK(r3.sigma_tilde == doctest::Approx(2.0));

  const std::vector<double> empty;
  CHECK_THROWS_AS(break_index(span_of(empty), 1), Error);
  CHECK_THROWS_AS(break_index(span_of(s1), 0), Error);

  // Direct predicate check on random profiles: r is the largest index with
  // sigma_r > tail / (k - r), and sigma_tilde is that tail average.
  Rng rng = make_rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> s(6);
    for (double& x : s) x = unif(rng);
    std::sort(s.begin(), s.end(), std::greater<>());
    const Index k = 1 + t % 6;
    const BreakIndexResult b = break_index(span_of(s), k);
    Index expect = 0;
    for (Index r = 1; r < k; ++r) {
      const double tail = std::accumulate(s.begin() + r, s.end(), 0.0);
      if (s[r - 1] > tail / double(k - r) + 1e-12) expect = r;
    }
    CHECK(b.r == expect);
    const double tail = std::accumulate(s.begin() + expect, s.end(), 0.0);
    CHECK(b.sigma_tilde == doctest::Approx(tail / double(k - expect)));
  }
}

TEST_CASE("k2 norm examples") {
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  x.diagonal() << 2.0, 2.0, 1.0;
  CHECK(k2_norm(x, 2) == doctest::Approx(std::sqrt(8.0)));
  CHECK(std::abs(oracle::k2_norm_subspace(x, 2, 1) - std::sqrt(8.0)) < 1e-9);

  Rng rng = make_rng(18);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix g = gaussian_matrix(4, 5, rng);
    CHECK(k2_norm(g, 1) == doctest::Approx(operator_norm(g)).epsilon(1e-12));
    CHECK(k2_norm(g, 4) == doctest::Approx(g.norm()).epsilon(1e-12));
    for (Index k = 1; k <= 4; ++k) {
      CHECK(std::abs(k2_norm(g, k) - oracle::k2_norm_subspace(g, k, 100 + t)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(k2_norm(x, 0), Error);
  CHECK_THROWS_AS(k2_norm(x, 4), Error);
}

TEST_CASE("k2 dual examples") {
  ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  CHECK(k2_dual(id2, 1) == doctest::Approx(2.0));

  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a.diagonal() << 3.0, 1.0;
  CHECK(k2_dual(a, 2) == doctest::Approx(std::sqrt(10.0)));
  CHECK(std::abs(oracle::k2_dual_ascent(a, 2, 1) - std::sqrt(10.0)) < 1e-6);

  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  CHECK(k2_dual(id4, 2) == doctest::Approx(std::sqrt(8.0)));
  CHECK(std::abs(oracle::k2_dual_ascent(id4, 2, 2) - std::sqrt(8.0)) < 1e-6);
  CHECK(inner(id4, id4).real() == doctest::Approx(k2_norm(id4, 2) * k2_dual(id4, 2)));
}

TEST_CASE("k2 dual properties") {
  Rng rng = make_rng(19);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix x = gaussian_matrix(3 + t % 3, 4, rng);
    const Index mn = std::min(x.rows(), x.cols());
    CHECK(std::abs(k2_dual(x, 1) - trace_norm(x)) <= 1e-10);
    CHECK(std::abs(k2_dual(x, mn) - x.norm()) <= 1e-10);
    double prev = INFINITY;
    for (Index k = 1; k <= mn; ++k) {
      const double d = k2_dual(x, k);
      CHECK(inner(x, x).real() <= k2_norm(x, k) * d + 1e-9);
      CHECK(d >= x.norm() - 1e-12);
      CHECK(d <= prev + 1e-12);
      prev = d;
    }
    // Rank <= k collapses the dual to the Frobenius norm.
    const ComplexMatrix low = gaussian_matrix(4, 2, rng) * gaussian_matrix(2, 5, rng);
    for (Index k = 2; k <= 4; ++k) CHECK(std::abs(k2_dual(low, k) - low.norm()) <= 1e-10);
  }
}
