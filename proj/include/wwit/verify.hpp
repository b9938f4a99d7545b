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
 * Numerical self-checks of the witness construction: closed forms against
 * dense linear algebra, exhaustive Schmidt enumeration, the product-state
 * optimizer and grid oracle, threshold formulas against bisection, and
 * randomized bound checks. Shared by the acceptance test binary and the
 * `verify` CLI subcommand.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wwit {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int n_min = 2;
    int n_max = 10;
    std::uint64_t seed = 0;
    int trials = 10000;
    int restarts = 32;
    int threads = 1;
};

CheckResult check_witness_coefficient();
/// Dense eigenvalues {c_n x (2^n - 1), c_n - 1 x 1}; n clamped to [2, 6].
CheckResult check_eigenstructure(int n_min, int n_max);
/// Every subset of size k <= n/2; n clamped to [2, 10]; under 10 s.
CheckResult check_schmidt_claims(int n_min, int n_max);
/// Optimizer equals c_n within 1e-9, under 5 s per n; n clamped to [3, 10].
CheckResult check_optimizer(int n_min, int n_max, int restarts, std::uint64_t seed,
                            int threads);
/// Full 60-step grid oracle at n = 3 brackets 4/9.
CheckResult check_grid_oracle();
CheckResult check_biseparable_alpha();
CheckResult check_noise_thresholds();
CheckResult check_tangency();

/// The four randomized suites; n clamped to [2, 6].
std::vector<CheckResult> check_property_suites(int n_min, int n_max, int trials,
                                               std::uint64_t seed);
CheckResult check_acin_probe(int trials, std::uint64_t seed);

/// Runs everything above for the given options.
std::vector<CheckResult> run_checks(const VerifyOptions &opts);

} // namespace wwit
