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
#include "wwit/bipartition.hpp"

#include <algorithm>
#include <sstream>

#include "wwit/tensor_core.hpp"

namespace wwit {

namespace {

// Scatters the bits of `packed` (MSB first) into the basis index positions of
// `qubits`.
std::uint64_t scatter(std::uint64_t packed, const std::vector<int> &qubits,
                      int n) {
    std::uint64_t index = 0;
    const auto m = static_cast<int>(qubits.size());
    for (int i = 0; i < m; ++i) {
        if (((packed >> (m - 1 - i)) & 1U) != 0U) {
            index |= std::uint64_t{1} << (n - qubits[static_cast<std::size_t>(i)]);
        }
    }
    return index;
}

void require_same_register(const PureState &s, const BipartitionSpec &b) {
    if (s.n_qubits() != b.n_qubits()) {
        std::ostringstream msg;
        msg << "bipartition is for " << b.n_qubits() << " qubits, state has "
            << s.n_qubits();
        throw InputError(msg.str());
    }
}

} // namespace

BipartitionSpec::BipartitionSpec(int n_qubits, std::vector<int> subset)
    : n_qubits_(n_qubits), subset_(std::move(subset)) {
    require_qubit_count(n_qubits);
    std::sort(subset_.begin(), subset_.end());
    if (subset_.empty() || static_cast<int>(subset_.size()) >= n_qubits) {
        throw InputError("subset: size must lie in [1, n-1]");
    }
    if (subset_.front() < 1 || subset_.back() > n_qubits) {
        throw InputError("subset: qubit index out of range");
    }
    if (std::adjacent_find(subset_.begin(), subset_.end()) != subset_.end()) {
        throw InputError("subset: repeated qubit index");
    }
}

std::vector<int> BipartitionSpec::complement() const {
    std::vector<int> out;
    for (int q = 1; q <= n_qubits_; ++q) {
        if (!std::binary_search(subset_.begin(), subset_.end(), q)) {
            out.push_back(q);
        }
    }
    return out;
}

int BipartitionSpec::cut_size() const {
    const auto k = static_cast<int>(subset_.size());
    return std::min(k, n_qubits_ - k);
}

BipartitionSpec BipartitionSpec::canonical() const {
    if (subset_.front() == 1) {
        return *this;
    }
    return {n_qubits_, complement()};
}

std::vector<BipartitionSpec> bipartitions_of_size(int n, int k) {
    require_qubit_count(n);
    if (k < 1 || k > n / 2) {
        std::ostringstream msg;
        msg << "k must lie in [1, " << n / 2 << "], got " << k;
        throw InputError(msg.str());
    }
    std::vector<BipartitionSpec> out;
    // Lexicographic combinations of {1..n}.
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = i + 1;
    }
    const bool half = 2 * k == n;
    while (true) {
        if (!half || c.front() == 1) {
            out.emplace_back(n, c);
        }
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

ComplexMatrix coefficient_matrix(const PureState &s, const BipartitionSpec &b) {
    require_same_register(s, b);
    const int n = s.n_qubits();
    const auto &rows_q = b.subset();
    const std::vector<int> cols_q = b.complement();
    const auto rows = Eigen::Index{1} << rows_q.size();
    const auto cols = Eigen::Index{1} << cols_q.size();

    std::vector<std::uint64_t> col_offset(static_cast<std::size_t>(cols));
    for (Eigen::Index j = 0; j < cols; ++j) {
        col_offset[static_cast<std::size_t>(j)] =
            scatter(static_cast<std::uint64_t>(j), cols_q, n);
    }
    ComplexMatrix c(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const std::uint64_t row_offset = scatter(static_cast<std::uint64_t>(i), rows_q, n);
        for (Eigen::Index j = 0; j < cols; ++j) {
            c(i, j) = s[row_offset | col_offset[static_cast<std::size_t>(j)]];
        }
    }
    return c;
}

double largest_schmidt_coefficient(const PureState &s, const BipartitionSpec &b) {
    return sigma_max(coefficient_matrix(s, b));
}

double max_biseparable_overlap_sq(const PureState &s, int k) {
    double best = 0.0;
    for (const auto &b : bipartitions_of_size(s.n_qubits(), k)) {
        const double sigma = largest_schmidt_coefficient(s, b);
        best = std::max(best, sigma * sigma);
    }
    return best;
}

PureState combine_bipartite(const BipartitionSpec &b, const ComplexVector &inside,
                            const ComplexVector &outside) {
    const int n = b.n_qubits();
    const auto &in_q = b.subset();
    const std::vector<int> out_q = b.complement();
    if (inside.size() != (Eigen::Index{1} << in_q.size()) ||
        outside.size() != (Eigen::Index{1} << out_q.size())) {
        throw InputError("combine_bipartite: factor length does not match the cut");
    }
    ComplexVector amps(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < inside.size(); ++i) {
        const std::uint64_t hi = scatter(static_cast<std::uint64_t>(i), in_q, n);
        for (Eigen::Index j = 0; j < outside.size(); ++j) {
            amps[static_cast<Eigen::Index>(hi | scatter(static_cast<std::uint64_t>(j), out_q, n))] =
                inside[i] * outside[j];
        }
    }
    return PureState::normalized(n, std::move(amps));
}

} // namespace wwit
