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

#include "entnorm/kyfan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "entnorm/error.hpp"

namespace entnorm {

namespace {

constexpr double kClampRel = 1e-14;
constexpr double kGuardRel = 1e-12;

std::vector<double> clamped(std::span<const double> sigma) {
  std::vector<double> out(sigma.begin(), sigma.end());
  const double top = out.empty() ? 0.0 : out.front();
  for (double& s : out) {
    if (s < kClampRel * top) s = 0.0;
  }
  return out;
}

void check_k(Index k, Index limit, const char* what) {
  if (k < 1 || k > limit) {
    fail(ErrorCode::parameter, std::string(what) + ": k=" + std::to_string(k) +
                                   " outside [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace

BreakIndexResult break_index(std::span<const double> sigma, Index k) {
  if (sigma.empty()) fail(ErrorCode::degenerate_input, "break_index: empty sigma");
  if (k < 1) fail(ErrorCode::parameter, "break_index: k must be >= 1");
  const std::vector<double> s = clamped(sigma);
  const Index len = static_cast<Index>(s.size());
  const double guard = kGuardRel * std::max(1.0, s.front());

  // tail[r] = sum_{i > r} sigma_i in 1-based terms, i.e. sum of s[r..].
  std::vector<double> tail(len + 1, 0.0);
  for (Index i = len - 1; i >= 0; --i) tail[i] = tail[i + 1] + s[i];
  auto tail_from = [&](Index r) { return r >= len ? 0.0 : tail[r]; };

  for (Index r = k - 1; r >= 1; --r) {
    const double head = r - 1 < len ? s[r - 1] : 0.0;
    if (head > tail_from(r) / static_cast<double>(k - r) + guard) {
      return {r, tail_from(r) / static_cast<double>(k - r)};
    }
  }
  return {0, tail_from(0) / static_cast<double>(k)};
}

double k2_norm_values(std::span<const double> sigma, Index k) {
  if (k < 1) fail(ErrorCode::parameter, "k2_norm: k must be >= 1");
  double acc = 0.0;
  const Index top = std::min<Index>(k, static_cast<Index>(sigma.size()));
  for (Index i = 0; i < top; ++i) acc += sigma[i] * sigma[i];
  return std::sqrt(acc);
}

double k2_dual_values(std::span<const double> sigma, Index k) {
  const BreakIndexResult b = break_index(sigma, k);
  double acc = 0.0;
  for (Index i = 0; i < b.r; ++i) acc += sigma[i] * sigma[i];
  acc += static_cast<double>(k - b.r) * b.sigma_tilde * b.sigma_tilde;
  return std::sqrt(acc);
}

double k2_norm(const ComplexMatrix& x, Index k) {
  check_k(k, std::min(x.rows(), x.cols()), "k2_norm");
  const RealVector s = singular_values(x);
  return k2_norm_values({s.data(), static_cast<std::size_t>(s.size())}, k);
}

double k2_dual(const ComplexMatrix& x, Index k) {
  check_k(k, std::min(x.rows(), x.cols()), "k2_dual");
  const RealVector s = singular_values(x);
  return k2_dual_values({s.data(), static_cast<std::size_t>(s.size())}, k);
}

}  // namespace entnorm
