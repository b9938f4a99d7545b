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
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wwit/bipartition.hpp"
#include "wwit/product_optimizer.hpp"
#include "wwit/random.hpp"
#include "wwit/witness.hpp"

using namespace wwit;

namespace {

QubitFactor ket(Complex a, Complex b) {
    QubitFactor f;
    f << a, b;
    return f;
}

ProductState tangent_point(int n) {
    const double a = std::sqrt(double(n - 1) / n);
    const double b = std::sqrt(1.0 / n);
    return make_product_state(std::vector<QubitFactor>(static_cast<std::size_t>(n), ket(a, b)));
}

} // namespace

TEST(LocalUpdate, BasisTargetFixesFactor) {
    const PureState target = basis_state(3, 0);
    const double h = std::numbers::sqrt2 / 2;
    const ProductState start = make_product_state({ket(h, h), ket(h, h), ket(h, h)});
    const LocalUpdateResult r = local_update(target, start, 2);
    EXPECT_FALSE(r.degenerate);
    EXPECT_NEAR(std::abs(r.state.factors[1](0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(r.state.factors[1](1)), 0.0, 1e-15);
    EXPECT_NEAR(r.overlap, 0.5, 1e-15);
}

TEST(LocalUpdate, TangentPointIsFixed) {
    for (int n = 3; n <= 8; ++n) {
        const PureState w = make_w_state(n);
        const ProductState p = tangent_point(n);
        for (int site = 1; site <= n; ++site) {
            const LocalUpdateResult r = local_update(w, p, site);
            const double fidelity = std::abs(p.factors[static_cast<std::size_t>(site - 1)]
                                                 .dot(r.state.factors[static_cast<std::size_t>(site - 1)]));
            EXPECT_NEAR(fidelity, 1.0, 1e-13);
            EXPECT_NEAR(r.overlap * r.overlap, witness_coefficient(n), 1e-13);
        }
    }
}

TEST(LocalUpdate, GhzSelectsMatchingBranch) {
    const double h = std::numbers::sqrt2 / 2;
    const ProductState p = make_product_state({ket(1, 0), ket(1, 0), ket(h, h)});
    const LocalUpdateResult r = local_update(make_ghz_state(3), p, 3);
    EXPECT_NEAR(std::abs(r.state.factors[2](0)), 1.0, 1e-15);
    EXPECT_NEAR(r.overlap, h, 1e-15);
}

TEST(LocalUpdate, FlagsVanishingEnvironment) {
    const ProductState p = make_product_state({ket(0, 1), ket(0, 1), ket(1, 0)});
    const LocalUpdateResult r = local_update(make_w_state(3), p, 3);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.state.factors[2], p.factors[2]);
    EXPECT_EQ(r.overlap, 0.0);
    EXPECT_THROW((void)local_update(make_w_state(3), p, 4), InputError);
}

TEST(Ascend, OverlapNeverDecreases) {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 5;
        const PureState target = random_pure_state(n, rng);
        std::vector<QubitFactor> factors;
        Rng frng(derive_seed(51, static_cast<std::uint64_t>(trial)));
        for (int q = 0; q < n; ++q) {
            factors.push_back(random_unit_vector(2, frng));
        }
        std::vector<double> history;
        const AscentOutcome out = ascend(target, make_product_state(factors), 1e-12, 200, &history);
        ASSERT_FALSE(history.empty());
        for (std::size_t i = 1; i < history.size(); ++i) {
            EXPECT_GE(history[i], history[i - 1] - 1e-15);
        }
        EXPECT_NEAR(out.overlap, history.back(), 1e-15);
    }
}

TEST(ClosestProduct, WStatesReachCoefficient) {
    for (int n = 3; n <= 10; ++n) {
        const AlphaResult r = closest_product_alpha(make_w_state(n));
        EXPECT_NEAR(r.alpha, witness_coefficient(n), 1e-9) << "n=" << n;
        EXPECT_TRUE(r.converged);
        EXPECT_EQ(r.per_restart_values.size(), 32U);
        EXPECT_NEAR(std::norm(product_overlap(r.argmax, make_w_state(n))), r.alpha, 1e-12);
    }
    EXPECT_NEAR(closest_product_alpha(make_w_state(3)).alpha, 4.0 / 9.0, 1e-12);
}

TEST(ClosestProduct, GhzAndProductTargets) {
    EXPECT_NEAR(closest_product_alpha(make_ghz_state(3)).alpha, 0.5, 1e-10);
    Rng rng(52);
    EXPECT_NEAR(closest_product_alpha(random_product_state(6, rng)).alpha, 1.0, 1e-10);
}

TEST(ClosestProduct, BoundedByBiseparableOverlap) {
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        const PureState s = random_pure_state(n, rng);
        OptimizerConfig cfg;
        cfg.restarts = 8;
        const double alpha = closest_product_alpha(s, cfg).alpha;
        EXPECT_LE(alpha, max_biseparable_overlap_sq(s, 1) + 1e-9);
    }
}

TEST(ClosestProduct, DeterministicAcrossThreads) {
    Rng rng(54);
    const PureState s = random_pure_state(6, rng);
    OptimizerConfig cfg;
    cfg.seed = 99;
    const AlphaResult one = closest_product_alpha(s, cfg);
    cfg.threads = 4;
    const AlphaResult four = closest_product_alpha(s, cfg);
    EXPECT_EQ(one.alpha, four.alpha);
    EXPECT_EQ(one.best_restart, four.best_restart);
    EXPECT_EQ(one.per_restart_values, four.per_restart_values);
    const AlphaResult again = closest_product_alpha(s, cfg);
    EXPECT_EQ(four.alpha, again.alpha);
}

TEST(ClosestProduct, RejectsBadConfig) {
    OptimizerConfig cfg;
    cfg.restarts = 0;
    EXPECT_THROW((void)closest_product_alpha(make_w_state(3), cfg), InputError);
}

TEST(GridOracle, WStateBracket) {
    const double g = brute_force_alpha_grid(make_w_state(3), 60, GridMode::Full);
    EXPECT_LE(g, 4.0 / 9.0 + 1e-15);
    EXPECT_GE(g, 4.0 / 9.0 - 5e-3);
}

TEST(GridOracle, SymmetricModeOnLargerW) {
    const double g = brute_force_alpha_grid(make_w_state(8), 200, GridMode::Symmetric);
    EXPECT_LE(g, std::pow(7.0 / 8.0, 7) + 1e-15);
    EXPECT_GE(g, std::pow(7.0 / 8.0, 7) - 1e-3);
}

TEST(GridOracle, BasisStateIsExact) {
    EXPECT_NEAR(brute_force_alpha_grid(basis_state(3, 0), 10, GridMode::Full), 1.0, 1e-15);
}

TEST(GridOracle, OptimizerDominatesGrid) {
    Rng rng(55);
    for (int trial = 0; trial < 5; ++trial) {
        const PureState s = random_pure_state(3, rng);
        const double grid = brute_force_alpha_grid(s, 24, GridMode::Full);
        EXPECT_GE(closest_product_alpha(s).alpha, grid - 1e-12);
    }
}

TEST(GridOracle, RejectsOversizedGrid) {
    EXPECT_THROW((void)brute_force_alpha_grid(make_w_state(3), 200, GridMode::Full), InputError);
    EXPECT_THROW((void)brute_force_alpha_grid(make_w_state(3), 1, GridMode::Full), InputError);
}
