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

#include <ostream>
#include <string>
#include <vector>

namespace entnorm::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // malformed file, bad flag or parameter
  kExitNumerical = 2,  // svd / eig / LP failure
  kExitUndecided = 3,  // verdict undecided and --require-decision was given
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to the --out path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entnorm::cli
