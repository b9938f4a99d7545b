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
 * Small dense complex linear algebra used throughout the library.
 *
 * Matrices here are tiny (coefficient matrices have at most 2^(N/2) rows
 * and density matrices are capped at dimension 1024), so everything is
 * plain dense storage on top of Eigen.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wwit {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest dimension accepted by the dense code paths (N = 10 qubits).
inline constexpr std::size_t kMaxDenseDim = 1024;

/// Malformed or out-of-range input. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative method ran out of iterations before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, ComplexVector last_iterate,
                     double residual)
        : std::runtime_error(what), last_iterate_(std::move(last_iterate)),
          residual_(residual) {}

    [[nodiscard]] const ComplexVector &last_iterate() const {
        return last_iterate_;
    }
    [[nodiscard]] double residual() const { return residual_; }

  private:
    ComplexVector last_iterate_;
    double residual_;
};

/// True when every entry is finite.
[[nodiscard]] bool all_finite(const ComplexVector &v);
[[nodiscard]] bool all_finite(const ComplexMatrix &m);

struct PowerIterationResult {
    double value = 0.0;      ///< largest singular value
    int iterations = 0;      ///< total over both starts
    double residual = 0.0;   ///< ||G v - lambda v|| at the accepted iterate
    /// Singular value estimate after every iteration of the accepted start.
    std::vector<double> history;
};

/**
 * Largest singular value of `m` by power iteration on the smaller of
 * m m^dagger and m^dagger m.
 *
 * The iteration starts from the all-ones vector and is repeated once from a
 * fixed pseudo-random perturbation of it; the larger estimate wins. A start
 * is converged when ||G v - lambda v|| <= tol * max(1, lambda).
 *
 * Throws InputError for a zero or non-finite matrix and ConvergenceError if
 * neither start converges within `max_iter` iterations.
 */
[[nodiscard]] PowerIterationResult
sigma_max_detailed(const ComplexMatrix &m, double tol = 1e-12,
                   int max_iter = 10000);

[[nodiscard]] inline double sigma_max(const ComplexMatrix &m,
                                      double tol = 1e-12,
                                      int max_iter = 10000) {
    return sigma_max_detailed(m, tol, max_iter).value;
}

/// Throws InputError naming the first (i, j) pair with |m(i,j) - conj(m(j,i))| > tol.
void require_hermitian(const ComplexMatrix &m, double tol);

/// Ascending eigenvalues of a Hermitian matrix (dimension <= kMaxDenseDim).
[[nodiscard]] Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m,
                                                    double tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix; rejects non-Hermitian input.
[[nodiscard]] double min_eigenvalue_hermitian(const ComplexMatrix &m,
                                              double tol = 1e-10);

} // namespace wwit
