// Copyright 2026 The wwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seeded random states for property checks and optimizer restarts.
 *
 * All generators take an explicit engine; nothing here touches global
 * state, so results depend only on the seed.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wwit/states.hpp"

namespace wwit {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; derives independent stream seeds from (seed, index).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random vector of the given length (normalized complex Gaussian).
[[nodiscard]] ComplexVector random_unit_vector(Eigen::Index length, Rng &rng);

[[nodiscard]] PureState random_pure_state(int n, Rng &rng);

/// Tensor product of n independent Haar-random qubits.
[[nodiscard]] PureState random_product_state(int n, Rng &rng);

/// Random size-k subset of {1..n}, sorted.
[[nodiscard]] std::vector<int> random_subset(int n, int k, Rng &rng);

/// Random weights in (0, 1] summing to one.
[[nodiscard]] std::vector<double> random_weights(std::size_t count, Rng &rng);

/// Haar-random 2x2 unitary.
[[nodiscard]] Eigen::Matrix2cd random_qubit_unitary(Rng &rng);

/// Haar-random d x d unitary (QR of a complex Gaussian matrix, phase-fixed).
[[nodiscard]] ComplexMatrix random_unitary(Eigen::Index d, Rng &rng);

/// Applies the single-qubit unitary `u` to qubit `q` (1-based).
[[nodiscard]] PureState apply_single_qubit(const PureState &s,
                                           const Eigen::Matrix2cd &u, int q);

} // namespace wwit
