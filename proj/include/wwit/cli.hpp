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
 * Command-line front end. Subcommands: info, eval, alpha, schmidt, sweep,
 * verify. Exit codes: 0 ok, 1 input error, 2 verification failure,
 * 3 non-convergence.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wwit/verify.hpp"

namespace wwit {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitVerification = 2,
    kExitNonConvergence = 3,
};

/// Runs one command; normal output goes to `out`, a single-line JSON error
/// record to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// `alpha` and `sweep` give byte-identical output across repeated runs and
/// thread counts.
CheckResult check_determinism(std::uint64_t seed);

} // namespace wwit
