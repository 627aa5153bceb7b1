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

#include "entnorm/error.hpp"

namespace entnorm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parameter: return "parameter";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::size: return "size";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

}  // namespace entnorm
