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
#include "wwit/random.hpp"

#include <algorithm>
#include <numeric>

namespace wwit {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexVector random_unit_vector(Eigen::Index length, Rng &rng) {
    std::normal_distribution<double> gauss;
    ComplexVector v(length);
    do {
        for (Eigen::Index i = 0; i < length; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v[i] = Complex(re, im);
        }
    } while (v.norm() == 0.0);
    return v / v.norm();
}

PureState random_pure_state(int n, Rng &rng) {
    require_qubit_count(n);
    return PureState::normalized(n, random_unit_vector(Eigen::Index{1} << n, rng));
}

PureState random_product_state(int n, Rng &rng) {
    require_qubit_count(n);
    ComplexVector amps = ComplexVector::Ones(1);
    for (int q = 0; q < n; ++q) {
        const ComplexVector f = random_unit_vector(2, rng);
        ComplexVector next(amps.size() * 2);
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * f[0];
            next[2 * i + 1] = amps[i] * f[1];
        }
        amps = std::move(next);
    }
    return PureState::normalized(n, std::move(amps));
}

std::vector<int> random_subset(int n, int k, Rng &rng) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    // Partial Fisher-Yates with explicit draws so the result does not depend
    // on the standard library's shuffle implementation.
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(all[static_cast<std::size_t>(i)],
                  all[static_cast<std::size_t>(pick(rng))]);
    }
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<double> random_weights(std::size_t count, Rng &rng) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    std::vector<double> w(count);
    for (auto &x : w) {
        x = uni(rng);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

Eigen::Matrix2cd random_qubit_unitary(Rng &rng) {
    return random_unitary(2, rng);
}

ComplexMatrix random_unitary(Eigen::Index d, Rng &rng) {
    std::normal_distribution<double> gauss;
    ComplexMatrix z(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        if (std::abs(diag) > 0.0) {
            q.col(j) *= diag / std::abs(diag);
        }
    }
    return q;
}

PureState apply_single_qubit(const PureState &s, const Eigen::Matrix2cd &u,
                             int q) {
    const int n = s.n_qubits();
    if (q < 1 || q > n) {
        throw InputError("apply_single_qubit: qubit index out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << (n - q);
    ComplexVector out = s.amplitudes();
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if ((b & mask) != 0U) {
            continue;
        }
        const auto i0 = static_cast<Eigen::Index>(b);
        const auto i1 = static_cast<Eigen::Index>(b | mask);
        const Complex a0 = s.amplitudes()[i0];
        const Complex a1 = s.amplitudes()[i1];
        out[i0] = u(0, 0) * a0 + u(0, 1) * a1;
        out[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return PureState::normalized(n, std::move(out));
}

} // namespace wwit
