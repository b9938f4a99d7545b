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
 * Closest fully separable pure state to a target: alpha = max |<phi|psi>|^2
 * over product states phi, computed by the higher-order power method
 * (alternating single-site maximization) with seeded restarts.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "wwit/states.hpp"

namespace wwit {

using QubitFactor = Eigen::Vector2cd;

/// |f_1> (x) |f_2> (x) ... (x) |f_n>, each factor normalized.
struct ProductState {
    std::vector<QubitFactor> factors;

    [[nodiscard]] int n_qubits() const { return static_cast<int>(factors.size()); }
    [[nodiscard]] PureState to_pure_state() const;
};

/// Validates factor normalization (1e-12).
[[nodiscard]] ProductState make_product_state(std::vector<QubitFactor> factors);

/// <p|target>, by successive contraction (no 2^n product vector is built).
[[nodiscard]] Complex product_overlap(const ProductState &p, const PureState &target);

struct LocalUpdateResult {
    ProductState state;
    double overlap; ///< |<p'|target>| after the update
    bool degenerate; ///< environment vanished; factor left unchanged
};

/**
 * Replaces the factor at `site` (1-based) by the normalized contraction of
 * the target against every other factor. This is the exact maximizer over
 * that factor, so |<p|target>| never decreases.
 */
[[nodiscard]] LocalUpdateResult local_update(const PureState &target,
                                             const ProductState &p, int site);

struct OptimizerConfig {
    int restarts = 32;
    double tol = 1e-12;
    int max_sweeps = 500;
    std::uint64_t seed = 0;
    /// Worker threads for restarts; results do not depend on this.
    int threads = 1;
};

struct AscentOutcome {
    ProductState state;
    double overlap = 0.0;
    int sweeps = 0;
    bool converged = false;
};

/**
 * Round-robin local updates from `start` until the overlap gain over a full
 * sweep drops below `tol` or `max_sweeps` is reached. If `history` is
 * non-null the overlap after every local update is appended to it.
 */
[[nodiscard]] AscentOutcome ascend(const PureState &target, ProductState start,
                                   double tol, int max_sweeps,
                                   std::vector<double> *history = nullptr);

struct AlphaResult {
    double alpha = 0.0;
    ProductState argmax;
    int sweeps_used = 0;  ///< sweeps taken by the winning restart
    int best_restart = 0;
    bool converged = true; ///< false if any restart hit max_sweeps
    std::vector<double> per_restart_values;
};

/// Best alpha over cfg.restarts seeded restarts; target must have n <= 16.
[[nodiscard]] AlphaResult closest_product_alpha(const PureState &target,
                                                const OptimizerConfig &cfg = {});

enum class GridMode {
    /// Independent (theta, phi) grid on qubits 1..n-1, exact optimum on qubit n.
    Full,
    /// One shared (theta, phi) for all qubits.
    Symmetric,
};

/**
 * Exhaustive grid lower bound on alpha. Factors are
 * cos(theta)|0> + e^{i phi} sin(theta)|1> with theta on `grid_steps` points
 * spanning [0, pi/2] and phi on `grid_steps` points spanning [0, 2 pi).
 * Full mode requires n <= 3. Rejects grids over 1e8 points.
 */
[[nodiscard]] double brute_force_alpha_grid(const PureState &target, int grid_steps,
                                            GridMode mode);

} // namespace wwit
