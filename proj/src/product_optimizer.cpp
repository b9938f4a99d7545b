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
#include "wwit/product_optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wwit/parallel.hpp"
#include "wwit/random.hpp"

namespace wwit {

namespace {

constexpr int kMaxOptimizerQubits = 16;
constexpr double kMaxGridPoints = 1e8;

void require_matching(const PureState &target, const ProductState &p) {
    if (p.n_qubits() != target.n_qubits()) {
        std::ostringstream msg;
        msg << "product state has " << p.n_qubits() << " factors, target has "
            << target.n_qubits() << " qubits";
        throw InputError(msg.str());
    }
}

// Contracts conj(factors) into `t` on every qubit except `site` (1-based).
// Qubits after the site sit in the low bits and are removed from the bottom;
// qubits before it are then removed from the top.
QubitFactor environment(const PureState &target, const ProductState &p, int site) {
    const int n = target.n_qubits();
    std::vector<Complex> t(target.amplitudes().data(),
                           target.amplitudes().data() + target.dim());
    for (int q = n; q > site; --q) {
        const QubitFactor &f = p.factors[static_cast<std::size_t>(q - 1)];
        const Complex f0 = std::conj(f[0]);
        const Complex f1 = std::conj(f[1]);
        const std::size_t half = t.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            t[i] = f0 * t[2 * i] + f1 * t[2 * i + 1];
        }
        t.resize(half);
    }
    for (int q = 1; q < site; ++q) {
        const QubitFactor &f = p.factors[static_cast<std::size_t>(q - 1)];
        const Complex f0 = std::conj(f[0]);
        const Complex f1 = std::conj(f[1]);
        const std::size_t half = t.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            t[i] = f0 * t[i] + f1 * t[i + half];
        }
        t.resize(half);
    }
    return {t[0], t[1]};
}

ProductState random_start(int n, Rng &rng) {
    ProductState p;
    p.factors.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const ComplexVector f = random_unit_vector(2, rng);
        p.factors.emplace_back(f[0], f[1]);
    }
    return p;
}

} // namespace

PureState ProductState::to_pure_state() const {
    ComplexVector amps = ComplexVector::Ones(1);
    for (const auto &f : factors) {
        ComplexVector next(amps.size() * 2);
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * f[0];
            next[2 * i + 1] = amps[i] * f[1];
        }
        amps = std::move(next);
    }
    return PureState::from_amplitudes(n_qubits(), std::move(amps));
}

ProductState make_product_state(std::vector<QubitFactor> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (std::abs(factors[i].squaredNorm() - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "factors[" << i << "]: not normalized";
            throw InputError(msg.str());
        }
    }
    require_qubit_count(static_cast<int>(factors.size()));
    return ProductState{std::move(factors)};
}

Complex product_overlap(const ProductState &p, const PureState &target) {
    require_matching(target, p);
    const QubitFactor env = environment(target, p, 1);
    return std::conj(p.factors[0][0]) * env[0] + std::conj(p.factors[0][1]) * env[1];
}

LocalUpdateResult local_update(const PureState &target, const ProductState &p,
                               int site) {
    require_matching(target, p);
    if (site < 1 || site > p.n_qubits()) {
        throw InputError("local_update: site out of range");
    }
    const QubitFactor env = environment(target, p, site);
    const double norm = env.norm();
    LocalUpdateResult out{p, norm, false};
    if (!(norm > 1e-300)) {
        out.degenerate = true;
        out.overlap = std::abs(product_overlap(p, target));
        return out;
    }
    out.state.factors[static_cast<std::size_t>(site - 1)] = env / norm;
    return out;
}

AscentOutcome ascend(const PureState &target, ProductState start, double tol,
                     int max_sweeps, std::vector<double> *history) {
    require_matching(target, start);
    AscentOutcome out;
    out.state = std::move(start);
    double current = std::abs(product_overlap(out.state, target));
    if (history != nullptr) {
        history->push_back(current);
    }
    const int n = target.n_qubits();
    while (out.sweeps < max_sweeps) {
        const double before = current;
        for (int site = 1; site <= n; ++site) {
            LocalUpdateResult step = local_update(target, out.state, site);
            out.state = std::move(step.state);
            current = step.overlap;
            if (history != nullptr) {
                history->push_back(current);
            }
        }
        ++out.sweeps;
        if (current - before < tol) {
            out.converged = true;
            break;
        }
    }
    out.overlap = current;
    return out;
}

AlphaResult closest_product_alpha(const PureState &target, const OptimizerConfig &cfg) {
    require_qubit_count(target.n_qubits(), kMaxOptimizerQubits);
    if (cfg.restarts < 1 || !(cfg.tol > 0.0) || cfg.max_sweeps < 1) {
        throw InputError("optimizer config: restarts, tol and max_sweeps must be positive");
    }
    const auto restarts = static_cast<std::size_t>(cfg.restarts);
    std::vector<AscentOutcome> outcomes(restarts);

    auto run = [&](std::size_t r) {
        Rng rng(derive_seed(cfg.seed, r));
        outcomes[r] = ascend(target, random_start(target.n_qubits(), rng), cfg.tol,
                             cfg.max_sweeps);
    };

    detail::parallel_for(restarts, cfg.threads, run);

    AlphaResult result;
    std::size_t best = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        const double value = outcomes[r].overlap * outcomes[r].overlap;
        result.per_restart_values.push_back(value);
        result.converged = result.converged && outcomes[r].converged;
        if (value > result.per_restart_values[best]) {
            best = r;
        }
    }
    result.alpha = result.per_restart_values[best];
    result.argmax = std::move(outcomes[best].state);
    result.sweeps_used = outcomes[best].sweeps;
    result.best_restart = static_cast<int>(best);
    return result;
}

double brute_force_alpha_grid(const PureState &target, int grid_steps, GridMode mode) {
    const int n = target.n_qubits();
    if (grid_steps < 2) {
        throw InputError("grid_steps must be at least 2");
    }
    std::vector<QubitFactor> grid;
    grid.reserve(static_cast<std::size_t>(grid_steps) * static_cast<std::size_t>(grid_steps));
    for (int i = 0; i < grid_steps; ++i) {
        const double theta = (std::numbers::pi / 2.0) * i / (grid_steps - 1);
        for (int j = 0; j < grid_steps; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / grid_steps;
            grid.emplace_back(std::cos(theta), std::polar(std::sin(theta), phi));
        }
    }

    if (mode == GridMode::Symmetric) {
        // Amplitude sums by excitation count: <f^{(x)n}|t> = sum_k conj(f0)^(n-k) conj(f1)^k S_k.
        std::vector<Complex> by_weight(static_cast<std::size_t>(n) + 1, 0.0);
        for (std::uint64_t b = 0; b < target.dim(); ++b) {
            by_weight[static_cast<std::size_t>(std::popcount(b))] += target[b];
        }
        double best = 0.0;
        for (const auto &f : grid) {
            Complex sum = 0.0;
            for (int k = 0; k <= n; ++k) {
                sum += std::pow(std::conj(f[0]), n - k) * std::pow(std::conj(f[1]), k) *
                       by_weight[static_cast<std::size_t>(k)];
            }
            best = std::max(best, std::norm(sum));
        }
        return best;
    }

    if (n > 3) {
        throw InputError("full grid mode supports at most 3 qubits");
    }
    const double points = std::pow(static_cast<double>(grid.size()), n - 1);
    if (points > kMaxGridPoints) {
        std::ostringstream msg;
        msg << "grid too large: " << points << " points (limit 1e8)";
        throw InputError(msg.str());
    }

    // Depth-first over qubits 1..n-1, each level contracting the top qubit.
    // The last qubit takes its exact optimum |remaining vector|.
    double best = 0.0;
    std::vector<std::vector<Complex>> level(static_cast<std::size_t>(n));
    level[0].assign(target.amplitudes().data(), target.amplitudes().data() + target.dim());
    auto descend = [&](auto &&self, int depth) -> void {
        const auto &t = level[static_cast<std::size_t>(depth)];
        if (depth == n - 1) {
            best = std::max(best, std::norm(t[0]) + std::norm(t[1]));
            return;
        }
        auto &next = level[static_cast<std::size_t>(depth + 1)];
        const std::size_t half = t.size() / 2;
        next.resize(half);
        for (const auto &f : grid) {
            const Complex f0 = std::conj(f[0]);
            const Complex f1 = std::conj(f[1]);
            for (std::size_t i = 0; i < half; ++i) {
                next[i] = f0 * t[i] + f1 * t[i + half];
            }
            self(self, depth + 1);
        }
    };
    descend(descend, 0);
    return best;
}

} // namespace wwit
