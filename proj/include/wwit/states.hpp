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
 * N-qubit pure states, mixtures of pure states, and dense density matrices.
 *
 * Basis index convention: qubit 1 is the most significant bit, so the ket
 * |100> of a three-qubit register is index 4.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wwit/tensor_core.hpp"

namespace wwit {

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 24;
/// Dense density matrices are capped at 2^10 x 2^10.
inline constexpr int kMaxDenseQubits = 10;
inline constexpr double kNormTol = 1e-10;

/// Throws InputError unless kMinQubits <= n <= max_n.
void require_qubit_count(int n, int max_n = kMaxQubits);

/// Bit of qubit `q` (1-based) in basis index `index` of an n-qubit register.
[[nodiscard]] constexpr unsigned qubit_bit(std::uint64_t index, int q, int n) {
    return static_cast<unsigned>((index >> (n - q)) & 1U);
}

class PureState {
  public:
    /// Validates the length (2^n) and normalization of `amplitudes`.
    static PureState from_amplitudes(int n_qubits, ComplexVector amplitudes,
                                     double tol = kNormTol);

    /// Rescales `amplitudes` to unit norm; rejects the zero vector.
    static PureState normalized(int n_qubits, ComplexVector amplitudes);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const ComplexVector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex operator[](std::size_t index) const {
        return amplitudes_[static_cast<Eigen::Index>(index)];
    }

  private:
    PureState(int n_qubits, ComplexVector amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    ComplexVector amplitudes_;
};

struct EnsembleTerm {
    double weight;
    PureState state;
};

/// A density operator held as a convex mixture of pure states.
class StateEnsemble {
  public:
    /// Weights must lie in (0, 1] and sum to one within `tol`.
    static StateEnsemble from_terms(std::vector<EnsembleTerm> terms,
                                    double tol = kNormTol);
    static StateEnsemble pure(PureState state);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<EnsembleTerm> &terms() const { return terms_; }

  private:
    StateEnsemble(int n_qubits, std::vector<EnsembleTerm> terms)
        : n_qubits_(n_qubits), terms_(std::move(terms)) {}

    int n_qubits_;
    std::vector<EnsembleTerm> terms_;
};

/// Dense density matrix for n <= kMaxDenseQubits.
class DenseDensity {
  public:
    /// Checks Hermiticity (1e-10), unit trace (1e-10) and min eigenvalue >= -1e-8.
    static DenseDensity from_matrix(int n_qubits, ComplexMatrix matrix);
    static DenseDensity from_ensemble(const StateEnsemble &ensemble);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] const ComplexMatrix &matrix() const { return matrix_; }

  private:
    DenseDensity(int n_qubits, ComplexMatrix matrix)
        : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

    int n_qubits_;
    ComplexMatrix matrix_;
};

[[nodiscard]] PureState basis_state(int n, std::uint64_t index);

/// Equal superposition of the n single-excitation kets.
[[nodiscard]] PureState make_w_state(int n);

/// (|0...0> + |1...1>) / sqrt(2).
[[nodiscard]] PureState make_ghz_state(int n);

/**
 * Three-qubit canonical form
 *   l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>
 * with l_i >= 0, sum l_i^2 = 1 and theta in [0, pi].
 */
[[nodiscard]] PureState make_acin_state(const std::array<double, 5> &lambda,
                                        double theta);

/// (a|0> + b|1>)^{(x) n}; requires |a|^2 + |b|^2 = 1.
[[nodiscard]] PureState make_symmetric_product(Complex a, Complex b, int n);

/**
 * Relabels qubits: qubit i of `s` becomes qubit perm[i-1] of the result.
 * `perm` must be a bijection on 1..n.
 */
[[nodiscard]] PureState permute_qubits(const PureState &s,
                                       std::span<const int> perm);

/// <s1|s2>, conjugate-linear in the first argument.
[[nodiscard]] Complex overlap(const PureState &s1, const PureState &s2);

} // namespace wwit
