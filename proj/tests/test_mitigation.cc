// Copyright 2026 The lmgvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "lmgvqe/mitigation.h"

using namespace lmgvqe;

TEST(Mitigation, CalibrationColumnsAreStochastic) {
    auto cal = calibrate(2, NoiseModel{0.05, 0.03, 0.0}, 20000, 3);
    ASSERT_EQ(cal.matrix.rows(), 4);
    EXPECT_EQ(cal.num_qubits(), 2u);
    for (int c = 0; c < 4; ++c) {
        EXPECT_NEAR(cal.matrix.col(c).sum(), 1.0, 1e-12);
    }
    // P(read 00 | 00) = 0.95^2.
    EXPECT_NEAR(cal.matrix(0, 0), 0.9025, 0.01);
}

TEST(Mitigation, IdentityCalibrationIsNoOp) {
    ConfusionMatrix cal{Eigen::MatrixXd::Identity(2, 2), 1};
    ShotResult r{1, {{"0", 700}, {"1", 300}}, 1000};
    auto z = PauliString::from_text("Z0", 1);
    auto raw = expectation_from_counts(r, z);
    auto mit = mitigated_expectation(r, cal, z);
    EXPECT_NEAR(mit.mean, raw.mean, 1e-14);
    EXPECT_NEAR(mit.std_error, raw.std_error, 1e-14);
}

TEST(Mitigation, InvertsKnownChannel) {
    Eigen::MatrixXd m(2, 2);
    m << 0.9, 0.2, 0.1, 0.8;
    ConfusionMatrix cal{m, 1};
    // True distribution (0.5, 0.5) reads as (0.55, 0.45).
    ShotResult r{1, {{"0", 5500}, {"1", 4500}}, 10000};
    auto x = mitigate_counts(r, cal);
    EXPECT_NEAR(x[0], 0.5, 1e-12);
    EXPECT_NEAR(x[1], 0.5, 1e-12);
}

TEST(Mitigation, SingularCalibrationThrows) {
    Eigen::MatrixXd m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    ConfusionMatrix cal{m, 1};
    ShotResult r{1, {{"0", 10}}, 10};
    EXPECT_THROW(mitigate_counts(r, cal), UnmitigableError);
    ShotResult wrong{2, {{"00", 10}}, 10};
    EXPECT_THROW(mitigate_counts(wrong, ConfusionMatrix{Eigen::MatrixXd::Identity(2, 2), 1}), std::invalid_argument);
}

TEST(Mitigation, ExtrapolationIsExactOnLines) {
    std::vector<FoldEstimate> pts{{1, 0.9, 0.01}, {3, 0.7, 0.01}};
    auto e = cnot_extrapolate(pts);
    EXPECT_NEAR(e.mean, 1.0, 1e-14);
    EXPECT_NEAR(e.std_error, std::sqrt(9 * 1e-4 + 1e-4) / 2, 1e-14);
    std::vector<FoldEstimate> three{{1, 2.0 - 0.1, 0.01}, {3, 2.0 - 0.3, 0.02}, {5, 2.0 - 0.5, 0.03}};
    EXPECT_NEAR(cnot_extrapolate(three).mean, 2.0, 1e-12);
    std::vector<FoldEstimate> zero_err{{1, 0.5, 0.0}, {3, 0.3, 0.0}};
    EXPECT_NEAR(cnot_extrapolate(zero_err).mean, 0.6, 1e-14);
}

TEST(Mitigation, ExtrapolationRejectsDegenerateInput) {
    std::vector<FoldEstimate> one{{1, 0.9, 0.01}};
    EXPECT_THROW(cnot_extrapolate(one), std::invalid_argument);
    std::vector<FoldEstimate> dup{{1, 0.9, 0.01}, {1, 0.8, 0.01}};
    EXPECT_THROW(cnot_extrapolate(dup), std::invalid_argument);
}
