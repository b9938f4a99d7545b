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
#include "wwit/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace wwit {

bool all_finite(const ComplexVector &v) {
    return std::all_of(v.data(), v.data() + v.size(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

bool all_finite(const ComplexMatrix &m) {
    return std::all_of(m.data(), m.data() + m.size(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

namespace {

struct StartOutcome {
    bool converged = false;
    double lambda = 0.0;
    double residual = 0.0;
    int iterations = 0;
    ComplexVector iterate;
    std::vector<double> history;
};

// Power iteration on a Hermitian positive semidefinite matrix.
StartOutcome iterate_gram(const ComplexMatrix &gram, ComplexVector v,
                          double tol, int max_iter) {
    StartOutcome out;
    v.normalize();
    for (int it = 1; it <= max_iter; ++it) {
        ComplexVector w = gram * v;
        const double lambda = v.dot(w).real();
        const double residual = (w - lambda * v).norm();
        out.iterations = it;
        out.lambda = lambda;
        out.residual = residual;
        out.history.push_back(std::sqrt(std::max(lambda, 0.0)));
        if (residual <= tol * std::max(1.0, lambda)) {
            out.converged = true;
            out.iterate = std::move(v);
            return out;
        }
        const double wn = w.norm();
        if (wn == 0.0) {
            // v lies in the null space; lambda = 0 is exact for this start.
            out.converged = true;
            out.iterate = std::move(v);
            return out;
        }
        v = w / wn;
    }
    out.iterate = std::move(v);
    return out;
}

} // namespace

PowerIterationResult sigma_max_detailed(const ComplexMatrix &m, double tol,
                                        int max_iter) {
    if (m.size() == 0) {
        throw InputError("sigma_max: empty matrix");
    }
    if (!(tol > 0.0) || max_iter <= 0) {
        throw InputError("sigma_max: tol and max_iter must be positive");
    }
    if (!all_finite(m)) {
        throw InputError("sigma_max: matrix has non-finite entries");
    }
    if (m.norm() == 0.0) {
        throw InputError("sigma_max: zero matrix");
    }

    const ComplexMatrix gram = m.rows() <= m.cols()
                                   ? ComplexMatrix(m * m.adjoint())
                                   : ComplexMatrix(m.adjoint() * m);
    const Eigen::Index dim = gram.rows();

    ComplexVector ones = ComplexVector::Ones(dim);
    ComplexVector perturbed = ones;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::normal_distribution<double> gauss;
    for (Eigen::Index i = 0; i < dim; ++i) {
        perturbed[i] += 0.5 * Complex(gauss(rng), gauss(rng));
    }

    StartOutcome first = iterate_gram(gram, ones, tol, max_iter);
    StartOutcome second = iterate_gram(gram, perturbed, tol, max_iter);

    for (const StartOutcome *o : {&first, &second}) {
        if (!o->converged) {
            std::ostringstream msg;
            msg << "sigma_max: no convergence after " << max_iter
                << " iterations (residual " << o->residual << ")";
            throw ConvergenceError(msg.str(), o->iterate, o->residual);
        }
    }

    StartOutcome &best = second.lambda > first.lambda ? second : first;
    PowerIterationResult result;
    result.value = std::sqrt(std::max(best.lambda, 0.0));
    result.iterations = first.iterations + second.iterations;
    result.residual = best.residual;
    result.history = std::move(best.history);
    return result;
}

void require_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        std::ostringstream msg;
        msg << "matrix is not square (" << m.rows() << "x" << m.cols() << ")";
        throw InputError(msg.str());
    }
    if (!all_finite(m)) {
        throw InputError("matrix has non-finite entries");
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                std::ostringstream msg;
                msg << "matrix is not Hermitian: entries (" << i << "," << j
                    << ") and (" << j << "," << i << ") differ";
                throw InputError(msg.str());
            }
        }
    }
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m, double tol) {
    require_hermitian(m, tol);
    if (static_cast<std::size_t>(m.rows()) > kMaxDenseDim) {
        throw InputError("dense eigendecomposition is capped at dimension 1024");
    }
    // Symmetrize so round-off in the input does not leak into the solver.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed");
    }
    return solver.eigenvalues();
}

double min_eigenvalue_hermitian(const ComplexMatrix &m, double tol) {
    return hermitian_eigenvalues(m, tol).minCoeff();
}

} // namespace wwit
