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

#include "wwit/families.hpp"

using namespace wwit;

TEST(Families, NamesRoundTrip) {
    EXPECT_EQ(parse_family("w_ghz_mix"), Family::WGhzMix);
    EXPECT_EQ(parse_family("w_white_noise"), Family::WWhiteNoise);
    EXPECT_EQ(family_name(Family::WWhiteNoise), "w_white_noise");
    EXPECT_THROW((void)parse_family("w_dephased"), InputError);
}

TEST(Families, RealizeTermCounts) {
    EXPECT_EQ(realize({Family::WGhzMix, 4, 0.3}).terms().size(), 2U);
    EXPECT_EQ(realize({Family::WGhzMix, 4, 1.0}).terms().size(), 1U);
    EXPECT_EQ(realize({Family::WWhiteNoise, 3, 0.5}).terms().size(), 9U);
    EXPECT_EQ(realize({Family::WWhiteNoise, 3, 0.0}).terms().size(), 8U);
    EXPECT_THROW((void)realize({Family::WGhzMix, 3, 1.5}), InputError);
    EXPECT_THROW((void)realize({Family::WWhiteNoise, 3, -0.1}), InputError);
}

TEST(Families, TraceCurveExamples) {
    const TraceCurve g = trace_curve(Family::WGhzMix, 3);
    EXPECT_NEAR(g(0.0), 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(g(1.0), 4.0 / 9.0 - 1.0, 1e-15);
    const TraceCurve w = trace_curve(Family::WWhiteNoise, 3);
    EXPECT_NEAR(w(0.0), 4.0 / 9.0 - 1.0 / 8.0, 1e-15);
    EXPECT_NEAR(w.slope, -7.0 / 8.0, 1e-15);
}

TEST(Families, TraceCurveMatchesEnsembleEvaluation) {
    const double ps[] = {0.0, 0.1, 0.37, 0.5, 0.9, 1.0};
    for (Family f : {Family::WGhzMix, Family::WWhiteNoise}) {
        for (int n = 2; n <= 10; ++n) {
            const WitnessSpec w = build_witness(n);
            for (double p : ps) {
                EXPECT_NEAR(expectation(w, realize({f, n, p})), trace_curve(f, n)(p), 1e-13)
                    << family_name(f) << " n=" << n << " p=" << p;
            }
        }
    }
}

TEST(Families, ThresholdsForThreeQubits) {
    const ThresholdReport white = thresholds(Family::WWhiteNoise, 3);
    EXPECT_NEAR(white.p_entangled, 23.0 / 63.0, 1e-15);
    EXPECT_NEAR(white.p_genuine, 13.0 / 21.0, 1e-15);
    EXPECT_LE(white.max_abs_difference(), 1e-12);

    const ThresholdReport ghz = thresholds(Family::WGhzMix, 3);
    EXPECT_NEAR(ghz.p_entangled, 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(ghz.p_genuine, 2.0 / 3.0, 1e-15);
    EXPECT_LE(ghz.max_abs_difference(), 1e-12);
}

TEST(Families, ThresholdsAgreeWithBisection) {
    for (Family f : {Family::WGhzMix, Family::WWhiteNoise}) {
        for (int n = 2; n <= 16; ++n) {
            const ThresholdReport r = thresholds(f, n);
            EXPECT_LE(r.max_abs_difference(), 1e-12) << family_name(f) << " n=" << n;
            if (n == 2) {
                EXPECT_DOUBLE_EQ(r.p_entangled, r.p_genuine);
            } else {
                EXPECT_LT(r.p_entangled, r.p_genuine);
            }
        }
    }
}

TEST(Families, LargeNTrend) {
    double previous = 1.0;
    for (int n = 3; n <= 24; ++n) {
        const double p = thresholds(Family::WGhzMix, n).p_entangled;
        EXPECT_LT(p, previous);
        EXPECT_GT(p, std::exp(-1.0));
        previous = p;
    }
    EXPECT_NEAR(previous, std::exp(-1.0), 1e-2);
    EXPECT_GT(thresholds(Family::WWhiteNoise, 16).p_genuine, thresholds(Family::WWhiteNoise, 4).p_genuine);
}

TEST(Sweep, GhzFlipsAtHalf) {
    const auto records = sweep(Family::WGhzMix, 3, 0.0, 1.0, 0.25);
    ASSERT_EQ(records.size(), 5U);
    EXPECT_FALSE(records[1].verdict.not_fully_separable);
    EXPECT_TRUE(records[2].verdict.not_fully_separable);
    EXPECT_FALSE(records[2].verdict.genuine_entangled);
    EXPECT_TRUE(records[3].verdict.genuine_entangled);
    EXPECT_DOUBLE_EQ(records[4].p, 1.0);
}

TEST(Sweep, SinglePoint) {
    const auto records = sweep(Family::WWhiteNoise, 3, 0.4, 0.4, 0.1);
    ASSERT_EQ(records.size(), 1U);
    EXPECT_NEAR(records[0].trace, trace_curve(Family::WWhiteNoise, 3)(0.4), 1e-15);
}

TEST(Sweep, WhiteNoiseFourQubitsGenuineOnset) {
    const auto records = sweep(Family::WWhiteNoise, 4, 0.0, 1.0, 0.01);
    ASSERT_EQ(records.size(), 101U);
    double first = -1.0;
    for (const auto &r : records) {
        if (r.verdict.genuine_entangled) {
            first = r.p;
            break;
        }
    }
    EXPECT_NEAR(first, 0.74, 1e-12);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
    const std::string one = sweep_to_csv(sweep(Family::WWhiteNoise, 5, 0.0, 1.0, 0.01, 1));
    const std::string many = sweep_to_csv(sweep(Family::WWhiteNoise, 5, 0.0, 1.0, 0.01, 4));
    EXPECT_EQ(one, many);
}

TEST(Sweep, CsvHeader) {
    const std::string csv = sweep_to_csv(sweep(Family::WGhzMix, 5, 0.0, 0.5, 0.5));
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "p,trace,not_fully_separable,excluded_d1,excluded_d2,genuine");
}

TEST(Sweep, NoteOnlyForThreeQubitGhzMix) {
    EXPECT_TRUE(sweep_note(Family::WGhzMix, 3).has_value());
    EXPECT_FALSE(sweep_note(Family::WGhzMix, 4).has_value());
    EXPECT_FALSE(sweep_note(Family::WWhiteNoise, 3).has_value());
}

TEST(Sweep, RejectsInvalidRanges) {
    EXPECT_THROW((void)sweep(Family::WGhzMix, 3, 0.6, 0.4, 0.1), InputError);
    EXPECT_THROW((void)sweep(Family::WGhzMix, 3, -0.1, 0.4, 0.1), InputError);
    EXPECT_THROW((void)sweep(Family::WGhzMix, 3, 0.0, 1.1, 0.1), InputError);
    EXPECT_THROW((void)sweep(Family::WGhzMix, 3, 0.0, 1.0, 0.0), InputError);
}
