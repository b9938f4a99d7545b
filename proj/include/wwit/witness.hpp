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
 * Witness operators of the form  W = alpha * I - |ref><ref|.
 *
 * The canonical witness for N qubits uses ref = |W_N> and
 * alpha = c_N = ((N-1)/N)^(N-1), the largest squared overlap of |W_N> with
 * a fully separable pure state. Expectation values are computed from
 * overlaps; W itself is only materialized as a dense matrix for N <= 6.
 */
#pragma once

#include <vector>

#include <json.hpp>

#include "wwit/states.hpp"

namespace wwit {

/// Exact value of c_N as numerator / denominator, (N-1)^(N-1) / N^(N-1).
/// gcd(N-1, N) = 1, so the fraction is already in lowest terms.
struct ExactCoefficient {
    __extension__ typedef unsigned __int128 uint128;
    uint128 numerator;
    uint128 denominator;
};

/// c_N = ((N-1)/N)^(N-1) for 2 <= N <= 24.
[[nodiscard]] double witness_coefficient(int n);
[[nodiscard]] ExactCoefficient witness_coefficient_exact(int n);

struct WitnessSpec {
    int n_qubits;
    PureState reference;
    double alpha;
    /// Reference is exactly |W_N>; enables the O(N) overlap path.
    bool w_reference;
};

/// alpha = c_N, reference = |W_N>.
[[nodiscard]] WitnessSpec build_witness(int n);

/// Caller-supplied alpha in (0, 1) and reference state.
[[nodiscard]] WitnessSpec build_custom_witness(PureState reference, double alpha);

/// <ref|psi>.
[[nodiscard]] Complex reference_overlap(const WitnessSpec &w, const PureState &psi);

/// Tr(W rho) = alpha - sum_j w_j |<ref|psi_j>|^2.
[[nodiscard]] double expectation(const WitnessSpec &w, const StateEnsemble &rho);
[[nodiscard]] double expectation(const WitnessSpec &w, const DenseDensity &rho);
[[nodiscard]] double expectation(const WitnessSpec &w, const PureState &psi);

/// c_N - |a_{0..01} + a_{0..10} + ... + a_{10..0}|^2 / N.
[[nodiscard]] double single_excitation_trace(const PureState &s);

/// Dense 2^N x 2^N matrix of the witness; N <= 6 only.
[[nodiscard]] ComplexMatrix dense_witness_matrix(const WitnessSpec &w);

/// Bounds on Tr(W_N rho) for the canonical witness.
struct BoundsTable {
    int n_qubits;
    double c;
    double global_min;    ///< c - 1, any state
    double global_max;    ///< 1 - c, any state
    double full_sep_min;  ///< 0, fully separable states
    /// dk_min[k-1] = c - (N-k)/N for states in D_k, k = 1..floor(N/2).
    std::vector<double> dk_min;
};

[[nodiscard]] BoundsTable bounds_table(int n);

struct Verdict {
    int n_qubits;
    double trace;
    bool not_fully_separable;
    /// excluded_from_dk[k-1]: the state lies outside D_k.
    std::vector<bool> excluded_from_dk;
    bool genuine_entangled;
    /// trace minus the nearest threshold among {0, dk_min[...]}.
    double margin;
};

/**
 * Classifies a canonical-witness trace value. Thresholds are strict and
 * carry no tolerance. Throws InputError if `t` lies outside the global
 * bounds by more than 1e-9, since no density operator can produce it.
 */
[[nodiscard]] Verdict classify(double t, int n);

/// {"trace", "c", "thresholds": {"full_sep", "d_k"}, "flags": {...}, "margin"}
[[nodiscard]] nlohmann::ordered_json to_json(const Verdict &v);
[[nodiscard]] nlohmann::ordered_json to_json(const BoundsTable &b);

} // namespace wwit
