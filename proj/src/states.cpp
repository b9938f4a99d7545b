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
#include "wwit/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wwit {

void require_qubit_count(int n, int max_n) {
    if (n < kMinQubits || n > max_n) {
        std::ostringstream msg;
        msg << "n_qubits must be in [" << kMinQubits << ", " << max_n
            << "], got " << n;
        throw InputError(msg.str());
    }
}

PureState PureState::from_amplitudes(int n_qubits, ComplexVector amplitudes,
                                     double tol) {
    require_qubit_count(n_qubits);
    const auto expected = Eigen::Index{1} << n_qubits;
    if (amplitudes.size() != expected) {
        std::ostringstream msg;
        msg << "amplitudes: expected " << expected << " entries for "
            << n_qubits << " qubits, got " << amplitudes.size();
        throw InputError(msg.str());
    }
    if (!all_finite(amplitudes)) {
        throw InputError("amplitudes: non-finite entry");
    }
    const double norm_sq = amplitudes.squaredNorm();
    if (std::abs(norm_sq - 1.0) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "amplitudes: not normalized (sum |a|^2 = " << norm_sq << ")";
        throw InputError(msg.str());
    }
    return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::normalized(int n_qubits, ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InputError("amplitudes: cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return from_amplitudes(n_qubits, std::move(amplitudes));
}

StateEnsemble StateEnsemble::from_terms(std::vector<EnsembleTerm> terms,
                                        double tol) {
    if (terms.empty()) {
        throw InputError("terms: ensemble must have at least one term");
    }
    const int n = terms.front().state.n_qubits();
    double total = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto &t = terms[i];
        if (!(t.weight > 0.0 && t.weight <= 1.0 + tol)) {
            std::ostringstream msg;
            msg << "terms[" << i << "].weight: must lie in (0, 1], got "
                << t.weight;
            throw InputError(msg.str());
        }
        if (t.state.n_qubits() != n) {
            std::ostringstream msg;
            msg << "terms[" << i << "]: n_qubits " << t.state.n_qubits()
                << " differs from " << n;
            throw InputError(msg.str());
        }
        total += t.weight;
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "terms: weights sum to " << total << ", expected 1";
        throw InputError(msg.str());
    }
    return StateEnsemble(n, std::move(terms));
}

StateEnsemble StateEnsemble::pure(PureState state) {
    const int n = state.n_qubits();
    std::vector<EnsembleTerm> terms;
    terms.push_back({1.0, std::move(state)});
    return StateEnsemble(n, std::move(terms));
}

DenseDensity DenseDensity::from_matrix(int n_qubits, ComplexMatrix matrix) {
    require_qubit_count(n_qubits, kMaxDenseQubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    if (matrix.rows() != dim || matrix.cols() != dim) {
        std::ostringstream msg;
        msg << "matrix: expected " << dim << "x" << dim << ", got "
            << matrix.rows() << "x" << matrix.cols();
        throw InputError(msg.str());
    }
    require_hermitian(matrix, 1e-10);
    const double trace = matrix.trace().real();
    if (std::abs(trace - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "matrix: trace is " << trace << ", expected 1";
        throw InputError(msg.str());
    }
    const double min_eig = min_eigenvalue_hermitian(matrix, 1e-10);
    if (min_eig < -1e-8) {
        std::ostringstream msg;
        msg << "matrix: not positive semidefinite (min eigenvalue " << min_eig
            << ")";
        throw InputError(msg.str());
    }
    return DenseDensity(n_qubits, std::move(matrix));
}

DenseDensity DenseDensity::from_ensemble(const StateEnsemble &ensemble) {
    const int n = ensemble.n_qubits();
    require_qubit_count(n, kMaxDenseQubits);
    const auto dim = Eigen::Index{1} << n;
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto &t : ensemble.terms()) {
        const auto &a = t.state.amplitudes();
        rho.noalias() += t.weight * (a * a.adjoint());
    }
    return DenseDensity(n, std::move(rho));
}

PureState basis_state(int n, std::uint64_t index) {
    require_qubit_count(n);
    const auto dim = Eigen::Index{1} << n;
    if (index >= static_cast<std::uint64_t>(dim)) {
        throw InputError("basis index out of range");
    }
    ComplexVector amps = ComplexVector::Zero(dim);
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return PureState::from_amplitudes(n, std::move(amps));
}

PureState make_w_state(int n) {
    require_qubit_count(n);
    ComplexVector amps = ComplexVector::Zero(Eigen::Index{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int q = 0; q < n; ++q) {
        amps[Eigen::Index{1} << q] = a;
    }
    return PureState::from_amplitudes(n, std::move(amps));
}

PureState make_ghz_state(int n) {
    require_qubit_count(n);
    const auto dim = Eigen::Index{1} << n;
    ComplexVector amps = ComplexVector::Zero(dim);
    amps[0] = std::numbers::sqrt2 / 2.0;
    amps[dim - 1] = std::numbers::sqrt2 / 2.0;
    return PureState::from_amplitudes(n, std::move(amps));
}

PureState make_acin_state(const std::array<double, 5> &lambda, double theta) {
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!(lambda[i] >= 0.0) || !std::isfinite(lambda[i])) {
            std::ostringstream msg;
            msg << "lambda[" << i << "]: must be a finite nonnegative real";
            throw InputError(msg.str());
        }
        sum_sq += lambda[i] * lambda[i];
    }
    if (std::abs(sum_sq - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "lambda: sum of squares is " << sum_sq << ", expected 1";
        throw InputError(msg.str());
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw InputError("theta: must lie in [0, pi]");
    }
    ComplexVector amps = ComplexVector::Zero(8);
    amps[0b000] = lambda[0];
    amps[0b100] = lambda[1] * std::polar(1.0, theta);
    amps[0b101] = lambda[2];
    amps[0b110] = lambda[3];
    amps[0b111] = lambda[4];
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState make_symmetric_product(Complex a, Complex b, int n) {
    require_qubit_count(n);
    const double norm_sq = std::norm(a) + std::norm(b);
    if (std::abs(norm_sq - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "single-qubit factor: |a|^2 + |b|^2 = " << norm_sq
            << ", expected 1";
        throw InputError(msg.str());
    }
    // Powers a^(n-k) b^k indexed by the excitation count k.
    std::vector<Complex> by_weight(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        by_weight[static_cast<std::size_t>(k)] =
            std::pow(a, n - k) * std::pow(b, k);
    }
    const auto dim = Eigen::Index{1} << n;
    ComplexVector amps(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        amps[i] = by_weight[static_cast<std::size_t>(
            std::popcount(static_cast<std::uint64_t>(i)))];
    }
    return PureState::from_amplitudes(n, std::move(amps));
}

PureState permute_qubits(const PureState &s, std::span<const int> perm) {
    const int n = s.n_qubits();
    if (perm.size() != static_cast<std::size_t>(n)) {
        std::ostringstream msg;
        msg << "permutation: expected " << n << " entries, got " << perm.size();
        throw InputError(msg.str());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int target : perm) {
        if (target < 1 || target > n || seen[static_cast<std::size_t>(target)]) {
            throw InputError("permutation: not a bijection on 1..n");
        }
        seen[static_cast<std::size_t>(target)] = true;
    }

    const auto dim = static_cast<std::uint64_t>(s.dim());
    ComplexVector out(static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
        std::uint64_t image = 0;
        for (int q = 1; q <= n; ++q) {
            if (qubit_bit(b, q, n) != 0U) {
                image |= std::uint64_t{1} << (n - perm[static_cast<std::size_t>(q - 1)]);
            }
        }
        out[static_cast<Eigen::Index>(image)] = s[b];
    }
    return PureState::from_amplitudes(n, std::move(out));
}

Complex overlap(const PureState &s1, const PureState &s2) {
    if (s1.n_qubits() != s2.n_qubits()) {
        std::ostringstream msg;
        msg << "overlap: dimension mismatch (" << s1.n_qubits() << " vs "
            << s2.n_qubits() << " qubits)";
        throw InputError(msg.str());
    }
    return s1.amplitudes().dot(s2.amplitudes());
}

} // namespace wwit
