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
#include <variant>
#include <vector>

#include "entnorm/linalg.hpp"
#include "entnorm/schmidt.hpp"

namespace entnorm {

enum class EnsembleKind {
  haar_pure,
  max_entangled,
  isotropic,
  sr_bounded_pure,
  sn_bounded_density,
  ginibre_density,
};

const char* to_string(EnsembleKind kind) noexcept;
/// Throws ErrorCode::parameter for unknown names.
EnsembleKind ensemble_kind_from_string(const std::string& name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::haar_pure;
  Index dim_a = 2;
  Index dim_b = 2;
  std::optional<Index> k;       // sr_bounded_pure, sn_bounded_density
  std::optional<double> p;      // isotropic
  std::optional<Index> rank;    // ginibre_density (default m * n)
  std::optional<Index> terms;   // sn_bounded_density (default 2 * m * n)
  std::uint64_t seed = 0;
};

/// Throws ErrorCode::parameter when a required field is missing or out of range.
void validate(const EnsembleSpec& spec);

struct Generated {
  std::variant<PureState, BipartiteOperator> value;
  /// For sn_bounded_density: the mixture it was drawn as (weights sum to 1,
  /// every state of Schmidt rank <= k).
  std::vector<WeightedState> mixture;

  bool is_pure() const noexcept { return std::holds_alternative<PureState>(value); }
  const PureState& pure() const { return std::get<PureState>(value); }
  const BipartiteOperator& op() const { return std::get<BipartiteOperator>(value); }
  /// The density matrix: |v><v| for pure kinds.
  BipartiteOperator density() const;
};

Generated generate(const EnsembleSpec& spec);

/// Sum_{i<d} |ii> / sqrt(d), d = min(m, n).
PureState max_entangled(Index dim_a, Index dim_b);

/// Schmidt rank exactly k with probability one.
PureState random_sr_state(Index dim_a, Index dim_b, Index k, std::uint64_t seed);

}  // namespace entnorm
