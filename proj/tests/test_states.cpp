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

#include <numbers>
#include <numeric>

#include "wwit/random.hpp"
#include "wwit/states.hpp"

using namespace wwit;

TEST(WState, ThreeQubits) {
    const PureState w = make_w_state(3);
    for (std::size_t i = 0; i < 8; ++i) {
        const double expected = (i == 1 || i == 2 || i == 4) ? 1.0 / std::sqrt(3.0) : 0.0;
        EXPECT_NEAR(std::abs(w[i] - expected), 0.0, 1e-15) << "index " << i;
    }
}

TEST(WState, TwoQubitsIsSymmetricBellState) {
    const PureState w = make_w_state(2);
    EXPECT_NEAR(w[1].real(), std::numbers::sqrt2 / 2, 1e-15);
    EXPECT_NEAR(w[2].real(), std::numbers::sqrt2 / 2, 1e-15);
    EXPECT_EQ(w[0], Complex(0.0));
    EXPECT_EQ(w[3], Complex(0.0));
}

TEST(WState, NormalizedAndRangeChecked) {
    EXPECT_NEAR(make_w_state(7).amplitudes().norm(), 1.0, 1e-12);
    EXPECT_THROW((void)make_w_state(1), InputError);
    EXPECT_THROW((void)make_w_state(25), InputError);
}

TEST(GhzState, SupportAndOrthogonalityToW) {
    const PureState g = make_ghz_state(3);
    EXPECT_NEAR(g[0].real(), std::numbers::sqrt2 / 2, 1e-15);
    EXPECT_NEAR(g[7].real(), std::numbers::sqrt2 / 2, 1e-15);
    const PureState g2 = make_ghz_state(2);
    EXPECT_NEAR(g2[3].real(), std::numbers::sqrt2 / 2, 1e-15);
    for (int n = 2; n <= 12; ++n) {
        EXPECT_EQ(overlap(make_ghz_state(n), make_w_state(n)), Complex(0.0)) << "n=" << n;
    }
    EXPECT_THROW((void)make_ghz_state(0), InputError);
}

TEST(AcinState, Construction) {
    EXPECT_EQ(make_acin_state({1, 0, 0, 0, 0}, 0.0)[0], Complex(1.0));
    EXPECT_EQ(make_acin_state({0, 1, 0, 0, 0}, 0.0)[4], Complex(1.0));
    const double h = std::numbers::sqrt2 / 2;
    const PureState s = make_acin_state({h, h, 0, 0, 0}, std::numbers::pi / 2);
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(s[4] - Complex(0.0, h)), 0.0, 1e-15);
}

TEST(AcinState, RejectsUnnormalizedReportingSum) {
    try {
        (void)make_acin_state({1, 1, 0, 0, 0}, 0.0);
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)make_acin_state({-1, 0, 0, 0, 0}, 0.0), InputError);
    EXPECT_THROW((void)make_acin_state({1, 0, 0, 0, 0}, 4.0), InputError);
}

TEST(SymmetricProduct, BasisAndTangentPoint) {
    EXPECT_EQ(make_symmetric_product(1.0, 0.0, 3)[0], Complex(1.0));
    const PureState t = make_symmetric_product(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0), 3);
    EXPECT_NEAR(std::abs(overlap(t, make_w_state(3))), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::norm(overlap(t, make_w_state(3))), 4.0 / 9.0, 1e-12);
}

TEST(SymmetricProduct, FiveQubitOverlapMatchesFormula) {
    const int n = 5;
    const double a = std::sqrt((n - 1.0) / n);
    const double b = std::sqrt(1.0 / n);
    const double direct = std::norm(overlap(make_symmetric_product(a, b, n), make_w_state(n)));
    const double formula = n * std::pow(a, 2 * (n - 1)) * b * b;
    EXPECT_NEAR(formula, std::pow(0.8, 4), 1e-15);
    EXPECT_NEAR(direct, std::pow(0.8, 4), 1e-12);
    EXPECT_THROW((void)make_symmetric_product(1.0, 1.0, 3), InputError);
}

TEST(Permute, Examples) {
    const PureState w = make_w_state(4);
    const std::vector<int> identity{1, 2, 3, 4};
    EXPECT_EQ(permute_qubits(w, identity).amplitudes(), w.amplitudes());
    const std::vector<int> shuffle{3, 1, 4, 2};
    EXPECT_EQ(permute_qubits(w, shuffle).amplitudes(), w.amplitudes());

    const std::vector<int> swap13{3, 2, 1};
    const PureState moved = permute_qubits(basis_state(3, 0b100), swap13);
    EXPECT_EQ(moved[0b001], Complex(1.0));
}

TEST(Permute, InverseRestoresAmplitudesExactly) {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 6;
        const PureState s = random_pure_state(n, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> inverse(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            inverse[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
        }
        EXPECT_EQ(permute_qubits(permute_qubits(s, perm), inverse).amplitudes(), s.amplitudes());
    }
}

TEST(Permute, RejectsMalformed) {
    const PureState s = make_w_state(3);
    EXPECT_THROW((void)permute_qubits(s, std::vector<int>{1, 2}), InputError);
    EXPECT_THROW((void)permute_qubits(s, std::vector<int>{1, 1, 2}), InputError);
    EXPECT_THROW((void)permute_qubits(s, std::vector<int>{0, 1, 2}), InputError);
}

TEST(Overlap, Examples) {
    EXPECT_NEAR(std::abs(overlap(make_w_state(3), make_w_state(3)) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(overlap(make_ghz_state(3), make_w_state(3)), Complex(0.0));
    EXPECT_THROW((void)overlap(make_w_state(3), make_w_state(4)), InputError);
}

TEST(Overlap, ConjugateLinearInFirstArgument) {
    const PureState a = make_acin_state({0, 1, 0, 0, 0}, std::numbers::pi / 2); // i|100>
    const PureState b = basis_state(3, 0b100);
    EXPECT_NEAR(std::abs(overlap(a, b) - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(Overlap, BoundedWithEqualityOnlyUpToPhase) {
    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 5;
        const PureState a = random_pure_state(n, rng);
        const PureState b = random_pure_state(n, rng);
        EXPECT_LT(std::abs(overlap(a, b)), 1.0 - 1e-6);
        const Complex phase = std::polar(1.0, 0.1 * trial);
        const PureState a_phased = PureState::from_amplitudes(n, a.amplitudes() * phase);
        EXPECT_NEAR(std::abs(overlap(a, a_phased)), 1.0, 1e-12);
    }
}

TEST(PureStateValidation, LengthAndNorm) {
    EXPECT_THROW((void)PureState::from_amplitudes(2, ComplexVector::Ones(3)), InputError);
    EXPECT_THROW((void)PureState::from_amplitudes(2, ComplexVector::Ones(4)), InputError);
    EXPECT_NO_THROW((void)PureState::from_amplitudes(2, ComplexVector::Ones(4) * 0.5));
    EXPECT_THROW((void)PureState::normalized(2, ComplexVector::Zero(4)), InputError);
}

TEST(Ensemble, Validation) {
    EXPECT_THROW((void)StateEnsemble::from_terms({}), InputError);
    EXPECT_THROW((void)StateEnsemble::from_terms({{0.5, make_w_state(3)}}), InputError);
    EXPECT_THROW((void)StateEnsemble::from_terms({{0.5, make_w_state(3)}, {0.5, make_w_state(4)}}),
                 InputError);
    EXPECT_THROW((void)StateEnsemble::from_terms({{1.5, make_w_state(3)}, {-0.5, make_w_state(3)}}),
                 InputError);
    const auto e = StateEnsemble::from_terms({{0.25, make_w_state(3)}, {0.75, make_ghz_state(3)}});
    EXPECT_EQ(e.n_qubits(), 3);
    EXPECT_EQ(e.terms().size(), 2U);
}

TEST(DenseDensity, FromEnsembleIsValidDensity) {
    const auto e = StateEnsemble::from_terms({{0.25, make_w_state(3)}, {0.75, make_ghz_state(3)}});
    const DenseDensity d = DenseDensity::from_ensemble(e);
    EXPECT_NEAR(d.matrix().trace().real(), 1.0, 1e-14);
    EXPECT_NO_THROW((void)DenseDensity::from_matrix(3, d.matrix()));
}

TEST(DenseDensity, Validation) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
    EXPECT_NO_THROW((void)DenseDensity::from_matrix(2, m));
    EXPECT_THROW((void)DenseDensity::from_matrix(3, m), InputError);      // shape
    EXPECT_THROW((void)DenseDensity::from_matrix(2, m * 2.0), InputError); // trace
    ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW((void)DenseDensity::from_matrix(2, neg), InputError);    // not PSD
    ComplexMatrix skew = m;
    skew(0, 1) = 0.1;
    EXPECT_THROW((void)DenseDensity::from_matrix(2, skew), InputError);   // not Hermitian
    EXPECT_THROW((void)DenseDensity::from_matrix(11, ComplexMatrix::Identity(2, 2)), InputError);
}
