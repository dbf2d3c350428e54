// Copyright 2026 The pctc-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pctc/linalg.hpp"

namespace pctc {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Unit vector with i.i.d. complex Gaussian entries, normalized.
Vector random_state(std::int64_t dim, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(std::int64_t dim, Rng& rng);

/// Random full-rank density matrix (normalized Wishart).
Matrix random_density(std::int64_t dim, Rng& rng);

/// n <= d unit vectors whose column matrix has sigma_min/sigma_max above
/// `min_ratio` (resampled until the margin holds).
std::vector<Vector> random_independent_set(int n, std::int64_t d, Rng& rng,
                                           double min_ratio = 1e-3);

/// Measurement operator blocks M_0..M_{n-1} on a d-dimensional system with
/// Sum_k M_k^dag M_k = I, carved from a Haar unitary on d*n dimensions.
std::vector<Matrix> random_measurement_ops(std::int64_t d, int n, Rng& rng);

}  // namespace pctc
