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
#include <random>

#include "lmgvqe/analysis.h"
#include "lmgvqe/quasispin.h"

using namespace lmgvqe;

TEST(Eigensolve, MatchesTwoByTwoClosedForm) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 100; ++t) {
        double a = u(gen), b = u(gen), d = u(gen);
        Eigen::Matrix2d m;
        m << a, b, b, d;
        double mean = (a + d) / 2, radius = std::hypot((a - d) / 2, b);
        auto e = eigensolve(m);
        EXPECT_NEAR(e.eigenvalues(0), mean - radius, 1e-12);
        EXPECT_NEAR(e.eigenvalues(1), mean + radius, 1e-12);
    }
}

TEST(Eigensolve, LmgOracles) {
    auto a3 = eigensolve(build_block(ModelParams{3, 1.0, 0.5, 0.0}, Parity::A).matrix);
    EXPECT_NEAR(a3.eigenvalues(0), (-1 - std::sqrt(7.0)) / 2, 1e-12);
    EXPECT_NEAR(a3.eigenvalues(1), (-1 + std::sqrt(7.0)) / 2, 1e-12);
    auto a7 = eigensolve(build_block(ModelParams{7, 1.0, 0.5, 0.0}, Parity::A).matrix);
    double expected[] = {-6.20809924, -2.94409721, 1.20809924, 5.94409721};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(a7.eigenvalues(i), expected[i], 1e-8);
    }
}

TEST(Eigensolve, ReconstructsRandomSymmetric) {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> n;
    for (int dim : {1, 2, 3, 5, 8}) {
        Eigen::MatrixXd m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                m(r, c) = n(gen);
            }
        }
        m = (m + m.transpose()).eval();
        auto e = eigensolve(m);
        Eigen::MatrixXd back = e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.transpose();
        EXPECT_LT((back - m).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((e.eigenvectors.transpose() * e.eigenvectors - Eigen::MatrixXd::Identity(dim, dim))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-12);
        for (int i = 1; i < dim; ++i) {
            EXPECT_LE(e.eigenvalues(i - 1), e.eigenvalues(i));
        }
    }
}

TEST(Eigensolve, RejectsNonSymmetric) {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 3, 4;
    EXPECT_THROW(eigensolve(m), std::invalid_argument);
    EXPECT_THROW(eigensolve(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST(Fidelity, Basics) {
    Eigen::VectorXd a(2), b(2);
    a << 1, 0;
    b << std::sqrt(0.5), std::sqrt(0.5);
    EXPECT_NEAR(fidelity(a, b), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
    Eigen::VectorXd bad(2);
    bad << 1, 1;
    EXPECT_THROW(fidelity(a, bad), std::invalid_argument);
    Eigen::VectorXd three(3);
    three << 1, 0, 0;
    EXPECT_THROW(fidelity(a, three), std::invalid_argument);
}
