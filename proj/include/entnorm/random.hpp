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
#include <random>

#include "entnorm/linalg.hpp"

namespace entnorm {

using Rng = std::mt19937_64;

/// Independent stream `stream` of the generator family selected by `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// i.i.d. standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
ComplexVector gaussian_vector(Index n, Rng& rng);
ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal folded back into Q.
ComplexMatrix haar_unitary(Index n, Rng& rng);

/// Orthonormal n x k frame drawn from the Haar measure.
ComplexMatrix haar_isometry(Index n, Index k, Rng& rng);

}  // namespace entnorm
