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
#include <numbers>

#include "lmgvqe/analysis.h"
#include "lmgvqe/circuits.h"
#include "lmgvqe/quasispin.h"

using namespace lmgvqe;

TEST(Circuit, Validation) {
    EXPECT_THROW(Circuit(1, {Gate::x(1)}), std::invalid_argument);
    EXPECT_THROW(Circuit(2, {Gate::cnot(0, 0)}), std::invalid_argument);
    EXPECT_THROW(Circuit(1, {Gate::ry_param(0, 1)}), std::invalid_argument);
    EXPECT_NO_THROW(Circuit(1, {}));
}

TEST(Circuit, AnsatzShapes) {
    EXPECT_EQ(ansatz_1q().num_parameters(), 1u);
    EXPECT_EQ(ansatz_1q().cnot_count(), 0u);
    auto c = ansatz_2q();
    EXPECT_EQ(c.num_qubits(), 2u);
    EXPECT_EQ(c.num_parameters(), 3u);
    EXPECT_EQ(c.cnot_count(), 2u);
    EXPECT_EQ(ansatz_for_dimension(2).num_qubits(), 1u);
    EXPECT_EQ(ansatz_for_dimension(4).num_qubits(), 2u);
    EXPECT_THROW(ansatz_for_dimension(3), std::invalid_argument);
}

TEST(Circuit, OneQubitState) {
    double theta = 0.8;
    std::vector<double> p{theta};
    auto s = run(ansatz_1q(), p);
    EXPECT_NEAR(s.amplitudes()(0).real(), std::cos(theta / 2), 1e-15);
    EXPECT_NEAR(s.amplitudes()(1).real(), std::sin(theta / 2), 1e-15);
    EXPECT_THROW(run(ansatz_1q(), std::vector<double>{}), std::invalid_argument);
}

TEST(Circuit, CnotUsesMostSignificantQubitZero) {
    Statevector s(2);
    s.apply_x(1);  // |01>, index 1
    s.apply_cnot(1, 0);
    EXPECT_NEAR(std::abs(s.amplitudes()(3)), 1.0, 1e-15);
}

TEST(Circuit, FoldPreservesIdealState) {
    std::vector<double> p{0.3, -1.2, 2.1};
    auto base = run(ansatz_2q(), p);
    auto folded = fold_cnots(ansatz_2q(), 3);
    EXPECT_EQ(folded.cnot_count(), 6u);
    EXPECT_TRUE(run(folded, p).amplitudes().isApprox(base.amplitudes(), 1e-14));
    EXPECT_THROW(fold_cnots(ansatz_2q(), 2), std::invalid_argument);
    EXPECT_THROW(fold_cnots(ansatz_2q(), 0), std::invalid_argument);
}

TEST(Circuit, StatesAreRealAndNormalized) {
    std::vector<double> p{0.9, 2.2, -0.4};
    auto s = run(ansatz_2q(), p);
    EXPECT_NEAR(s.norm(), 1.0, 1e-14);
    EXPECT_LT(s.amplitudes().imag().cwiseAbs().maxCoeff(), 1e-15);
}

// The ansatz must be able to express every eigenvector of a 4x4 block.
TEST(Circuit, TwoQubitAnsatzReachesEigenvectors) {
    auto block = build_block(ModelParams{7, 1.0, 0.5, 0.0}, Parity::A);
    auto eig = eigensolve(block.matrix);
    auto circuit = ansatz_2q();
    for (Eigen::Index k = 0; k < 4; ++k) {
        double best = 0.0;
        const int grid = 40;
        for (int a = 0; a < grid; ++a) {
            for (int b = 0; b < grid; ++b) {
                for (int c = 0; c < grid; ++c) {
                    auto angle = [&](int i) { return -std::numbers::pi + 2 * std::numbers::pi * i / grid; };
                    std::vector<double> p{angle(a), angle(b), angle(c)};
                    best = std::max(best, fidelity(run(circuit, p), Eigen::VectorXd(eig.eigenvectors.col(k))));
                }
            }
        }
        EXPECT_GT(best, 0.98) << "eigenvector " << k;
    }
}

TEST(Statevector, RejectsUnnormalized) {
    Eigen::VectorXcd v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(Statevector{v}, std::invalid_argument);
    Eigen::VectorXcd w(3);
    w << 1.0, 0.0, 0.0;
    EXPECT_THROW(Statevector{w}, std::invalid_argument);
}
