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

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "entnorm/linalg.hpp"
#include "entnorm/schmidt.hpp"

namespace entnorm::cli {

/// What the "data" field of an operator file holds.
enum class OperatorKind { state_vector, operator_matrix, density };

const char* to_string(OperatorKind kind) noexcept;

/// Trace, Hermiticity and positivity slack for density files, equal to the
/// slack of the library's density checks. Larger deviations load with a
/// warning rather than being corrected.
inline constexpr double kDensityTol = 1e-9;

/// A validated operator file.
///
/// JSON layout:
///   {"dims": [m, n], "kind": "state_vector" | "operator" | "density",
///    "data": [[re, im], ...]            (state_vector, m * n entries)
///          | [[[re, im], ...], ...]     (operator/density, m * n rows),
///    "meta": {"key": "value", ...}}     (optional)
struct OperatorFile {
  OperatorKind kind;
  std::variant<PureState, BipartiteOperator> value;
  std::map<std::string, std::string> meta;
  std::vector<std::string> warnings;
  std::string digest;  // sha256 of the raw file bytes, empty when not read from disk

  bool is_pure() const noexcept { return std::holds_alternative<PureState>(value); }
  const PureState& pure() const;
  const BipartiteOperator& op() const;
  Index dim_a() const;
  Index dim_b() const;
  /// The operator itself, or |v><v| for a state vector.
  BipartiteOperator as_operator() const;
};

/// Throws Error(ErrorCode::parse) naming the offending JSON path.
OperatorFile parse_operator(const nlohmann::json& doc);
OperatorFile load_operator(const std::string& path);

nlohmann::json to_json(const PureState& v, const std::map<std::string, std::string>& meta = {});
nlohmann::json to_json(const BipartiteOperator& x, OperatorKind kind,
                       const std::map<std::string, std::string>& meta = {});

/// Serialized form used for every file this tool writes. Doubles are printed
/// as the shortest decimal that round-trips.
std::string dump(const nlohmann::json& doc);
void save_file(const std::string& path, const std::string& contents);

std::string sha256_hex(const std::string& bytes);

}  // namespace entnorm::cli
