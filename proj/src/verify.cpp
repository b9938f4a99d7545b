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
#include "wwit/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wwit/bipartition.hpp"
#include "wwit/families.hpp"
#include "wwit/product_optimizer.hpp"
#include "wwit/random.hpp"
#include "wwit/witness.hpp"

namespace wwit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

struct Range {
    int lo;
    int hi;
    [[nodiscard]] bool empty() const { return lo > hi; }
};

Range clamp_range(int lo, int hi, int cap_lo, int cap_hi) {
    return {std::max(lo, cap_lo), std::min(hi, cap_hi)};
}

CheckResult empty_range(std::string id, std::string description) {
    return {std::move(id), std::move(description), true, "no n in range; skipped", 0.0};
}

} // namespace

CheckResult check_witness_coefficient() {
    const auto start = Clock::now();
    CheckResult r{"coefficient", "c_3 = 4/9, c_4 = 27/64 exactly; c_n decreasing to 1/e", true, {}, 0.0};
    const auto c3 = witness_coefficient_exact(3);
    const auto c4 = witness_coefficient_exact(4);
    const bool exact = c3.numerator == 4 && c3.denominator == 9 && c4.numerator == 27 &&
                       c4.denominator == 64 && witness_coefficient(3) == 4.0 / 9.0 &&
                       witness_coefficient(4) == 27.0 / 64.0;
    bool decreasing = true;
    for (int n = 3; n <= 50; ++n) {
        decreasing = decreasing && witness_coefficient(n) < witness_coefficient(n - 1);
    }
    const double gap = std::abs(witness_coefficient(50) - 1.0 / std::numbers::e);
    r.passed = exact && decreasing && gap < 4e-3;
    r.detail = "exact=" + std::string(exact ? "yes" : "no") +
               " decreasing=" + (decreasing ? "yes" : "no") + " |c_50-1/e|=" + fmt_double(gap);
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_eigenstructure(int n_min, int n_max) {
    const Range range = clamp_range(n_min, n_max, 2, 6);
    if (range.empty()) {
        return empty_range("eigenstructure", "dense witness eigenvalues");
    }
    const auto start = Clock::now();
    CheckResult r{"eigenstructure",
                  "dense witness has eigenvalues c (x 2^n-1) and c-1 (x 1), n=" +
                      std::to_string(range.lo) + ".." + std::to_string(range.hi),
                  true, {}, 0.0};
    double worst = 0.0;
    for (int n = range.lo; n <= range.hi; ++n) {
        const WitnessSpec w = build_witness(n);
        const Eigen::VectorXd ev = hermitian_eigenvalues(dense_witness_matrix(w));
        worst = std::max(worst, std::abs(ev[0] - (w.alpha - 1.0)));
        for (Eigen::Index i = 1; i < ev.size(); ++i) {
            worst = std::max(worst, std::abs(ev[i] - w.alpha));
        }
    }
    r.passed = worst <= 1e-12;
    r.detail = "max |eigenvalue error| = " + fmt_double(worst);
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_schmidt_claims(int n_min, int n_max) {
    const Range range = clamp_range(n_min, n_max, 2, 10);
    if (range.empty()) {
        return empty_range("schmidt", "largest Schmidt coefficient of W_n");
    }
    const auto start = Clock::now();
    CheckResult r{"schmidt",
                  "sigma_max(C^(k)) of W_n = sqrt((n-k)/n) for every cut, n=" +
                      std::to_string(range.lo) + ".." + std::to_string(range.hi),
                  true, {}, 0.0};
    double worst = 0.0;
    std::size_t cuts = 0;
    for (int n = range.lo; n <= range.hi; ++n) {
        const PureState w = make_w_state(n);
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            const int k = std::popcount(mask);
            if (k > n / 2) {
                continue;
            }
            std::vector<int> subset;
            for (int q = 1; q <= n; ++q) {
                if ((mask >> (q - 1)) & 1U) {
                    subset.push_back(q);
                }
            }
            const double sigma = largest_schmidt_coefficient(w, BipartitionSpec(n, subset));
            worst = std::max(worst, std::abs(sigma - std::sqrt(double(n - k) / n)));
            ++cuts;
        }
    }
    r.seconds = seconds_since(start);
    r.passed = worst <= 1e-10 && r.seconds < 10.0;
    r.detail = std::to_string(cuts) + " cuts, max |error| = " + fmt_double(worst) +
               ", " + fmt_double(r.seconds) + " s";
    return r;
}

CheckResult check_optimizer(int n_min, int n_max, int restarts, std::uint64_t seed,
                            int threads) {
    const Range range = clamp_range(n_min, n_max, 3, 10);
    if (range.empty()) {
        return empty_range("optimizer", "closest product state to W_n");
    }
    const auto start = Clock::now();
    CheckResult r{"optimizer",
                  "closest_product_alpha(W_n) = c_n within 1e-9, < 5 s per n, n=" +
                      std::to_string(range.lo) + ".." + std::to_string(range.hi),
                  true, {}, 0.0};
    double worst = 0.0;
    double slowest = 0.0;
    bool converged = true;
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.threads = threads;
    for (int n = range.lo; n <= range.hi; ++n) {
        const auto t0 = Clock::now();
        const AlphaResult a = closest_product_alpha(make_w_state(n), cfg);
        slowest = std::max(slowest, seconds_since(t0));
        worst = std::max(worst, std::abs(a.alpha - witness_coefficient(n)));
        converged = converged && a.converged;
    }
    r.passed = worst <= 1e-9 && slowest < 5.0;
    r.detail = "max |alpha - c_n| = " + fmt_double(worst) + ", slowest n took " +
               fmt_double(slowest) + " s" + (converged ? "" : " (some restarts hit max_sweeps)");
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_grid_oracle() {
    const auto start = Clock::now();
    CheckResult r{"grid_oracle", "60-step full grid at n=3 lies in [4/9 - 5e-3, 4/9]", true, {}, 0.0};
    const double grid = brute_force_alpha_grid(make_w_state(3), 60, GridMode::Full);
    r.passed = grid <= 4.0 / 9.0 + 1e-12 && grid >= 4.0 / 9.0 - 5e-3;
    r.detail = "grid alpha = " + fmt_double(grid) + ", 4/9 - grid = " + fmt_double(4.0 / 9.0 - grid);
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_biseparable_alpha() {
    const auto start = Clock::now();
    CheckResult r{"biseparable_alpha", "max biseparable overlap^2 of W_3 = 2/3", true, {}, 0.0};
    const double value = max_biseparable_overlap_sq(make_w_state(3), 1);
    const double err = std::abs(value - 2.0 / 3.0);
    r.passed = err <= 1e-10;
    r.detail = "|error| = " + fmt_double(err);
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_noise_thresholds() {
    const auto start = Clock::now();
    CheckResult r{"noise_thresholds",
                  "n=3 white noise (23/63, 13/21) and W+GHZ (4/9, 2/3); closed form = bisection",
                  true, {}, 0.0};
    const ThresholdReport white = thresholds(Family::WWhiteNoise, 3);
    const ThresholdReport ghz = thresholds(Family::WGhzMix, 3);
    const double value_err = std::max({std::abs(white.p_entangled - 23.0 / 63.0),
                                       std::abs(white.p_genuine - 13.0 / 21.0),
                                       std::abs(ghz.p_entangled - 4.0 / 9.0),
                                       std::abs(ghz.p_genuine - 2.0 / 3.0)});
    const double bisect_err = std::max(white.max_abs_difference(), ghz.max_abs_difference());
    r.passed = value_err <= 1e-12 && bisect_err <= 1e-12;
    r.detail = "max |closed form - expected| = " + fmt_double(value_err) +
               ", max |closed form - bisection| = " + fmt_double(bisect_err);
    r.seconds = seconds_since(start);
    return r;
}

CheckResult check_tangency() {
    const auto start = Clock::now();
    CheckResult r{"tangency", "W_3 vanishes on the tangent point, 2/3 - |W_3><W_3| on the tangent plane",
                  true, {}, 0.0};
    const WitnessSpec w3 = build_witness(3);
    const PureState point =
        make_symmetric_product(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0), 3);
    const double at_point = expectation(w3, point);

    const double h = std::numbers::sqrt2 / 2.0;
    auto pair_state = [&](std::uint64_t i, std::uint64_t j) {
        ComplexVector a = ComplexVector::Zero(8);
        a[static_cast<Eigen::Index>(i)] = h;
        a[static_cast<Eigen::Index>(j)] = h;
        return PureState::from_amplitudes(3, std::move(a));
    };
    const WitnessSpec w3_bar = build_custom_witness(make_w_state(3), 2.0 / 3.0);
    double worst_plane = 0.0;
    for (const auto &weights : std::vector<std::array<double, 3>>{
             {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {0.5, 0.3, 0.2}, {0.1, 0.1, 0.8}}) {
        const StateEnsemble plane = StateEnsemble::from_terms(
            {{weights[0], pair_state(0b001, 0b010)},
             {weights[1], pair_state(0b001, 0b100)},
             {weights[2], pair_state(0b010, 0b100)}});
        worst_plane = std::max(worst_plane, std::abs(expectation(w3_bar, plane)));
    }
    r.passed = std::abs(at_point) <= 1e-12 && worst_plane <= 1e-12;
    r.detail = "point: " + fmt_double(at_point) + ", plane: max |t| = " + fmt_double(worst_plane);
    r.seconds = seconds_since(start);
    return r;
}

std::vector<CheckResult> check_property_suites(int n_min, int n_max, int trials,
                                               std::uint64_t seed) {
    const Range range = clamp_range(n_min, n_max, 2, 6);
    if (range.empty()) {
        return {empty_range("property_suites", "randomized bound checks")};
    }
    std::vector<WitnessSpec> witnesses;
    std::vector<PureState> w_states;
    for (int n = 0; n <= range.hi; ++n) {
        const int m = std::max(n, 2);
        witnesses.push_back(build_witness(m));
        w_states.push_back(make_w_state(m));
    }
    const std::string span = " (" + std::to_string(trials) + " trials, n=" +
                             std::to_string(range.lo) + ".." + std::to_string(range.hi) + ")";
    std::uniform_int_distribution<int> pick_n(range.lo, range.hi);
    std::uniform_int_distribution<int> pick_terms(1, 4);
    std::vector<CheckResult> out;

    {
        const auto start = Clock::now();
        Rng rng(derive_seed(seed, 1));
        std::uniform_int_distribution<int> coin(0, 3);
        double min_t = 1.0;
        for (int i = 0; i < trials; ++i) {
            const int n = pick_n(rng);
            const auto weights = random_weights(static_cast<std::size_t>(pick_terms(rng)), rng);
            std::vector<EnsembleTerm> terms;
            for (double w : weights) {
                if (coin(rng) == 0) {
                    // Symmetric product with the largest overlap with W_n: t = 0 exactly.
                    terms.push_back({w, make_symmetric_product(std::sqrt(double(n - 1) / n),
                                                               std::sqrt(1.0 / n), n)});
                } else {
                    terms.push_back({w, random_product_state(n, rng)});
                }
            }
            const auto rho = StateEnsemble::from_terms(std::move(terms));
            min_t = std::min(min_t, expectation(witnesses[static_cast<std::size_t>(n)], rho));
        }
        out.push_back({"fully_separable_bound", "fully separable ensembles give t >= 0" + span,
                       min_t >= -1e-10, "min t = " + fmt_double(min_t), seconds_since(start)});
    }
    {
        const auto start = Clock::now();
        Rng rng(derive_seed(seed, 2));
        double min_slack = 1.0;
        std::uniform_int_distribution<int> coin(0, 3);
        for (int i = 0; i < trials; ++i) {
            const int n = pick_n(rng);
            std::uniform_int_distribution<int> pick_k(1, n / 2);
            const int k = pick_k(rng);
            const BipartitionSpec cut(n, random_subset(n, k, rng));
            ComplexVector inside;
            ComplexVector outside;
            if (coin(rng) == 0) {
                // Top Schmidt pair of W_n across the cut: the tightest state in D_k.
                Eigen::JacobiSVD<ComplexMatrix> svd(
                    coefficient_matrix(w_states[static_cast<std::size_t>(n)], cut),
                    Eigen::ComputeFullU | Eigen::ComputeFullV);
                inside = svd.matrixU().col(0);
                outside = svd.matrixV().col(0).conjugate();
            } else {
                inside = random_unit_vector(Eigen::Index{1} << k, rng);
                outside = random_unit_vector(Eigen::Index{1} << (n - k), rng);
            }
            const PureState psi = combine_bipartite(cut, inside, outside);
            const double t = expectation(witnesses[static_cast<std::size_t>(n)], psi);
            const double bound = witness_coefficient(n) - double(n - k) / n;
            min_slack = std::min(min_slack, t - bound);
        }
        out.push_back({"dk_bound", "pure states in D_k give t >= c - (n-k)/n" + span,
                       min_slack >= -1e-10, "min (t - bound) = " + fmt_double(min_slack),
                       seconds_since(start)});
    }
    {
        const auto start = Clock::now();
        Rng rng(derive_seed(seed, 3));
        double worst = -1.0;
        std::uniform_int_distribution<int> coin(0, 9);
        for (int i = 0; i < trials; ++i) {
            const int n = pick_n(rng);
            const auto weights = random_weights(static_cast<std::size_t>(pick_terms(rng)), rng);
            std::vector<EnsembleTerm> terms;
            for (double w : weights) {
                terms.push_back({w, coin(rng) == 0 ? w_states[static_cast<std::size_t>(n)]
                                                   : random_pure_state(n, rng)});
            }
            const auto rho = StateEnsemble::from_terms(std::move(terms));
            const double t = expectation(witnesses[static_cast<std::size_t>(n)], rho);
            const double c = witness_coefficient(n);
            worst = std::max({worst, (c - 1.0) - t, t - (1.0 - c)});
        }
        out.push_back({"global_bound", "any ensemble gives c-1 <= t <= 1-c" + span,
                       worst <= 1e-10, "max violation = " + fmt_double(worst),
                       seconds_since(start)});
    }
    {
        const auto start = Clock::now();
        Rng rng(derive_seed(seed, 4));
        double worst = 0.0;
        for (int i = 0; i < trials; ++i) {
            const int n = pick_n(rng);
            const PureState psi = random_pure_state(n, rng);
            worst = std::max(worst, std::abs(single_excitation_trace(psi) -
                                             expectation(witnesses[static_cast<std::size_t>(n)],
                                                         StateEnsemble::pure(psi))));
        }
        out.push_back({"single_excitation", "closed-form pure-state trace = ensemble expectation" + span,
                       worst <= 1e-12, "max |difference| = " + fmt_double(worst),
                       seconds_since(start)});
    }
    return out;
}

CheckResult check_acin_probe(int trials, std::uint64_t seed) {
    const auto start = Clock::now();
    Rng rng(derive_seed(seed, 5));
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    const WitnessSpec w3 = build_witness(3);
    double min_t = 1.0;
    double max_l1 = 0.0;
    for (int i = 0; i < trials; ++i) {
        std::array<double, 5> l{};
        double norm_sq = 0.0;
        for (auto &x : l) {
            x = std::abs(gauss(rng));
            norm_sq += x * x;
        }
        for (auto &x : l) {
            x /= std::sqrt(norm_sq);
        }
        // Every fifth trial concentrates on l1, the only single-excitation amplitude.
        if (i % 5 == 0) {
            const double rest = std::sqrt(1.0 - l[1] * l[1]);
            l[1] = std::sqrt(1.0 - 1e-4 * rest * rest);
            const double scale = std::sqrt(1.0 - l[1] * l[1]) / rest;
            for (std::size_t j : {0, 2, 3, 4}) {
                l[j] *= scale;
            }
        }
        max_l1 = std::max(max_l1, l[1]);
        min_t = std::min(min_t, expectation(w3, make_acin_state(l, angle(rng))));
    }
    CheckResult r{"acin_probe",
                  "canonical three-qubit form: t = 4/9 - l1^2/3 >= 1/9, never detected (" +
                      std::to_string(trials) + " trials)",
                  min_t >= 1.0 / 9.0 - 1e-10, {}, seconds_since(start)};
    r.detail = "min t = " + fmt_double(min_t) + " (largest l1 sampled " + fmt_double(max_l1) + ")";
    return r;
}

std::vector<CheckResult> run_checks(const VerifyOptions &opts) {
    std::vector<CheckResult> out;
    out.push_back(check_witness_coefficient());
    out.push_back(check_eigenstructure(opts.n_min, opts.n_max));
    out.push_back(check_schmidt_claims(opts.n_min, opts.n_max));
    out.push_back(check_optimizer(opts.n_min, opts.n_max, opts.restarts, opts.seed, opts.threads));
    out.push_back(check_grid_oracle());
    out.push_back(check_biseparable_alpha());
    out.push_back(check_noise_thresholds());
    out.push_back(check_tangency());
    for (auto &c : check_property_suites(opts.n_min, opts.n_max, opts.trials, opts.seed)) {
        out.push_back(std::move(c));
    }
    out.push_back(check_acin_probe(opts.trials, opts.seed));
    return out;
}

} // namespace wwit
