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
#include "wwit/witness.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wwit {

namespace {

// c_N only needs double precision; the exact path is capped by 128-bit range.
constexpr int kMaxExactCoefficientQubits = 24;
constexpr int kMaxCoefficientQubits = 1000;
constexpr int kMaxDenseWitnessQubits = 6;

ExactCoefficient::uint128 ipow(ExactCoefficient::uint128 base, int exp) {
    ExactCoefficient::uint128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

} // namespace

ExactCoefficient witness_coefficient_exact(int n) {
    require_qubit_count(n, kMaxExactCoefficientQubits);
    return {ipow(static_cast<unsigned>(n - 1), n - 1),
            ipow(static_cast<unsigned>(n), n - 1)};
}

double witness_coefficient(int n) {
    require_qubit_count(n, kMaxCoefficientQubits);
    if (n <= kMaxExactCoefficientQubits) {
        const auto exact = witness_coefficient_exact(n);
        return static_cast<double>(static_cast<long double>(exact.numerator) /
                                   static_cast<long double>(exact.denominator));
    }
    const double nd = static_cast<double>(n);
    return std::exp((nd - 1.0) * std::log1p(-1.0 / nd));
}

WitnessSpec build_witness(int n) {
    require_qubit_count(n);
    return WitnessSpec{n, make_w_state(n), witness_coefficient(n), true};
}

WitnessSpec build_custom_witness(PureState reference, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream msg;
        msg << "alpha: must lie in (0, 1), got " << alpha;
        throw InputError(msg.str());
    }
    const int n = reference.n_qubits();
    const bool is_w =
        (reference.amplitudes() - make_w_state(n).amplitudes()).norm() < 1e-12;
    return WitnessSpec{n, std::move(reference), alpha, is_w};
}

Complex reference_overlap(const WitnessSpec &w, const PureState &psi) {
    if (psi.n_qubits() != w.n_qubits) {
        std::ostringstream msg;
        msg << "dimension mismatch: witness on " << w.n_qubits
            << " qubits, state on " << psi.n_qubits();
        throw InputError(msg.str());
    }
    if (!w.w_reference) {
        return overlap(w.reference, psi);
    }
    Complex sum = 0.0;
    for (int q = 0; q < w.n_qubits; ++q) {
        sum += psi[std::size_t{1} << q];
    }
    return sum / std::sqrt(static_cast<double>(w.n_qubits));
}

double expectation(const WitnessSpec &w, const StateEnsemble &rho) {
    if (rho.n_qubits() != w.n_qubits) {
        std::ostringstream msg;
        msg << "dimension mismatch: witness on " << w.n_qubits
            << " qubits, state on " << rho.n_qubits();
        throw InputError(msg.str());
    }
    double fidelity = 0.0;
    for (const auto &t : rho.terms()) {
        fidelity += t.weight * std::norm(reference_overlap(w, t.state));
    }
    return w.alpha - fidelity;
}

double expectation(const WitnessSpec &w, const DenseDensity &rho) {
    if (rho.n_qubits() != w.n_qubits) {
        std::ostringstream msg;
        msg << "dimension mismatch: witness on " << w.n_qubits
            << " qubits, state on " << rho.n_qubits();
        throw InputError(msg.str());
    }
    const auto &ref = w.reference.amplitudes();
    return w.alpha - ref.dot(rho.matrix() * ref).real();
}

double expectation(const WitnessSpec &w, const PureState &psi) {
    return w.alpha - std::norm(reference_overlap(w, psi));
}

double single_excitation_trace(const PureState &s) {
    const int n = s.n_qubits();
    Complex sum = 0.0;
    for (int q = 0; q < n; ++q) {
        sum += s[std::size_t{1} << q];
    }
    return witness_coefficient(n) - std::norm(sum) / static_cast<double>(n);
}

ComplexMatrix dense_witness_matrix(const WitnessSpec &w) {
    require_qubit_count(w.n_qubits, kMaxDenseWitnessQubits);
    const auto &ref = w.reference.amplitudes();
    const auto dim = ref.size();
    return w.alpha * ComplexMatrix::Identity(dim, dim) - ref * ref.adjoint();
}

BoundsTable bounds_table(int n) {
    require_qubit_count(n);
    const double c = witness_coefficient(n);
    BoundsTable b{n, c, c - 1.0, 1.0 - c, 0.0, {}};
    const double nd = static_cast<double>(n);
    for (int k = 1; k <= n / 2; ++k) {
        b.dk_min.push_back(c - (nd - k) / nd);
    }
    return b;
}

Verdict classify(double t, int n) {
    const BoundsTable b = bounds_table(n);
    if (!std::isfinite(t) || t < b.global_min - 1e-9 || t > b.global_max + 1e-9) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "trace " << t << " lies outside the global bounds ["
            << b.global_min << ", " << b.global_max
            << "]; input is not a valid density operator";
        throw InputError(msg.str());
    }
    Verdict v{n, t, t < b.full_sep_min, {}, false, 0.0};
    double nearest = b.full_sep_min;
    for (double threshold : b.dk_min) {
        v.excluded_from_dk.push_back(t < threshold);
        if (std::abs(t - threshold) < std::abs(t - nearest)) {
            nearest = threshold;
        }
    }
    v.genuine_entangled = v.excluded_from_dk.front();
    v.margin = t - nearest;
    return v;
}

nlohmann::ordered_json to_json(const BoundsTable &b) {
    nlohmann::ordered_json j;
    j["n_qubits"] = b.n_qubits;
    j["c"] = b.c;
    j["eigenvalues"] = {b.c, b.c - 1.0};
    j["global"] = {b.global_min, b.global_max};
    j["full_sep_min"] = b.full_sep_min;
    j["d_k_min"] = b.dk_min;
    return j;
}

nlohmann::ordered_json to_json(const Verdict &v) {
    const BoundsTable b = bounds_table(v.n_qubits);
    nlohmann::ordered_json j;
    j["trace"] = v.trace;
    j["c"] = b.c;
    j["thresholds"] = {{"full_sep", b.full_sep_min}, {"d_k", b.dk_min}};
    nlohmann::ordered_json flags;
    flags["not_fully_separable"] = v.not_fully_separable;
    std::vector<bool> excluded(v.excluded_from_dk.begin(), v.excluded_from_dk.end());
    flags["excluded_from_d_k"] = excluded;
    flags["genuine_entangled"] = v.genuine_entangled;
    j["flags"] = flags;
    j["margin"] = v.margin;
    return j;
}

} // namespace wwit
