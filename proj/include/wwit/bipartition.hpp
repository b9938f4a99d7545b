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
 * Coefficient matrices of pure states across qubit bipartitions.
 *
 * For a cut S | S^c the amplitudes a_b are reshaped into a matrix C with
 * rows indexed by the bits of the qubits in S and columns by the bits of
 * the remaining qubits, both in ascending qubit order. The singular values
 * of C are the Schmidt coefficients of the cut, and sigma_max(C) is the
 * largest overlap of the state with any pure state that is a product
 * across that cut.
 */
#pragma once

#include <vector>

#include "wwit/states.hpp"

namespace wwit {

class BipartitionSpec {
  public:
    /// `subset` holds 1-based qubit indices; 1 <= |subset| <= n - 1.
    BipartitionSpec(int n_qubits, std::vector<int> subset);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    /// Sorted, as given.
    [[nodiscard]] const std::vector<int> &subset() const { return subset_; }
    [[nodiscard]] std::vector<int> complement() const;
    /// min(|S|, n - |S|)
    [[nodiscard]] int cut_size() const;
    /// The side containing qubit 1; equal partitions compare equal here.
    [[nodiscard]] BipartitionSpec canonical() const;

    friend bool operator==(const BipartitionSpec &, const BipartitionSpec &) = default;

  private:
    int n_qubits_;
    std::vector<int> subset_;
};

/**
 * Every unordered bipartition with cut size k, each listed once.
 * For k < n/2 these are the size-k subsets; for k = n/2 only subsets that
 * contain qubit 1.
 */
[[nodiscard]] std::vector<BipartitionSpec> bipartitions_of_size(int n, int k);

/// 2^|S| x 2^(n-|S|) coefficient matrix of `s` across `b`.
[[nodiscard]] ComplexMatrix coefficient_matrix(const PureState &s,
                                               const BipartitionSpec &b);

[[nodiscard]] double largest_schmidt_coefficient(const PureState &s,
                                                 const BipartitionSpec &b);

/// max over all cuts of size k of largest_schmidt_coefficient^2.
/// Requires 1 <= k <= floor(n/2).
[[nodiscard]] double max_biseparable_overlap_sq(const PureState &s, int k);

/// Inverse of coefficient_matrix for a product: |inside>_S (x) |outside>_{S^c}.
[[nodiscard]] PureState combine_bipartite(const BipartitionSpec &b,
                                          const ComplexVector &inside,
                                          const ComplexVector &outside);

} // namespace wwit
