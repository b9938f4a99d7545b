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
 * The two mixed-state families studied with the W-state witness:
 *
 *   w_ghz_mix:      p |W_N><W_N| + (1-p) |GHZ_N><GHZ_N|
 *   w_white_noise:  p |W_N><W_N| + (1-p) I / 2^N
 *
 * Both give a trace that is affine in p, so detection thresholds have
 * closed forms; they are also located numerically by bisection.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wwit/states.hpp"
#include "wwit/witness.hpp"

namespace wwit {

enum class Family { WGhzMix, WWhiteNoise };

[[nodiscard]] std::string_view family_name(Family f);
/// Throws InputError for anything other than "w_ghz_mix" / "w_white_noise".
[[nodiscard]] Family parse_family(std::string_view name);

struct FamilySpec {
    Family family;
    int n_qubits;
    double p;
};

/// Explicit ensemble. The white-noise family expands over all 2^N basis
/// states and is limited to N <= 10.
[[nodiscard]] StateEnsemble realize(const FamilySpec &f);

/// t(p) = intercept + slope * p
struct TraceCurve {
    double intercept;
    double slope;

    [[nodiscard]] double operator()(double p) const { return intercept + slope * p; }
};

[[nodiscard]] TraceCurve trace_curve(Family family, int n);

struct ThresholdReport {
    Family family;
    int n_qubits;
    /// Smallest p beyond which the trace drops below 0 (entangled).
    double p_entangled;
    /// Smallest p beyond which the trace drops below c - (N-1)/N (genuine).
    double p_genuine;
    double p_entangled_bisection;
    double p_genuine_bisection;

    [[nodiscard]] double max_abs_difference() const;
};

[[nodiscard]] ThresholdReport thresholds(Family family, int n);

struct SweepRecord {
    double p;
    double trace;
    Verdict verdict;
};

/// Grid p_from, p_from + step, ... <= p_to (ascending), classified.
[[nodiscard]] std::vector<SweepRecord> sweep(Family family, int n, double p_from,
                                             double p_to, double step,
                                             int threads = 1);

/// CSV with header p,trace,not_fully_separable,excluded_d1..excluded_dK,genuine.
[[nodiscard]] std::string sweep_to_csv(const std::vector<SweepRecord> &records);

/// Note attached to three-qubit sweeps about the three-tangle comparison.
[[nodiscard]] std::optional<std::string> sweep_note(Family family, int n);

} // namespace wwit
