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

#include <json.hpp>

#include "entnorm/dualnorms.hpp"
#include "entnorm/linalg.hpp"
#include "entnorm/sknorm.hpp"

namespace entnorm::cli {

/// Machine-readable result of one invocation. to_json() always emits the same
/// key set: command, inputs{file, digest}, k, result, tolerances, seed,
/// warnings, wall_time_ms. Absent values are null.
struct Report {
  std::string command;
  std::optional<std::string> file;
  std::optional<std::string> digest;
  std::optional<Index> k;
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const;
};

enum class Format { json, text };

/// JSON output is the stable interface; text is a flattened key: value
/// listing meant for people.
std::string render(const Report& report, Format format);

nlohmann::json scalar_json(double value);
nlohmann::json interval_json(const NormInterval& interval);
nlohmann::json decomposition_json(const Decomposition& decomposition);
nlohmann::json vector_json(const ComplexVector& v);
nlohmann::json matrix_json(const ComplexMatrix& x);

}  // namespace entnorm::cli
