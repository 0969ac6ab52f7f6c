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

#include <random>

#include "lmgvqe/pauli.h"
#include "lmgvqe/quasispin.h"

using namespace lmgvqe;

namespace {

Eigen::MatrixXcd random_hermitian(int dim, std::mt19937_64 &gen) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            m(r, c) = {normal(gen), normal(gen)};
        }
    }
    return (m + m.adjoint()) / 2.0;
}

PauliSum block_sum(int n, Parity p) {
    return decompose(build_block(ModelParams{n, 1.0, 0.5, 0.0}, p).matrix);
}

}  // namespace

TEST(PauliString, TextRoundTrip) {
    for (std::string text : {"I", "Z0", "X1", "Z0X1", "Y0Y1"}) {
        EXPECT_EQ(PauliString::from_text(text, 2).str(), text);
    }
    EXPECT_EQ(PauliString::from_text("X0", 1).str(), "X0");
    EXPECT_THROW(PauliString::from_text("Q0", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::from_text("X2", 2), std::invalid_argument);
}

TEST(PauliString, QubitZeroIsMostSignificant) {
    auto z0 = PauliString::from_text("Z0", 2).to_matrix();
    // Z on qubit 0 flips sign on indices 2 and 3.
    EXPECT_EQ(z0(0, 0).real(), 1.0);
    EXPECT_EQ(z0(1, 1).real(), 1.0);
    EXPECT_EQ(z0(2, 2).real(), -1.0);
    EXPECT_EQ(z0(3, 3).real(), -1.0);
    EXPECT_EQ(PauliString::from_index(1, 2).str(), "X1");
    EXPECT_EQ(PauliString::from_index(4, 2).str(), "X0");
}

TEST(PauliString, ProductTable) {
    auto x = PauliString::from_text("X0", 1);
    auto y = PauliString::from_text("Y0", 1);
    auto p = multiply(x, y);
    EXPECT_EQ(p.string.str(), "Z0");
    EXPECT_NEAR(p.phase.imag(), 1.0, 1e-15);
    for (uint64_t i = 0; i < 16; ++i) {
        for (uint64_t j = 0; j < 16; ++j) {
            auto a = PauliString::from_index(i, 2);
            auto b = PauliString::from_index(j, 2);
            auto prod = multiply(a, b);
            Eigen::MatrixXcd dense = a.to_matrix() * b.to_matrix();
            EXPECT_TRUE(dense.isApprox(prod.phase * prod.string.to_matrix(), 1e-14));
        }
    }
}

TEST(Decompose, N3Blocks) {
    auto a = block_sum(3, Parity::A);
    EXPECT_NEAR(a.coefficient("I"), -0.5, 1e-12);
    EXPECT_NEAR(a.coefficient("Z0"), -1.0, 1e-12);
    EXPECT_NEAR(a.coefficient("X0"), -0.8660254, 1e-7);
    EXPECT_EQ(a.size(), 3u);
    auto b = block_sum(3, Parity::B);
    EXPECT_NEAR(b.coefficient("I"), 0.5, 1e-12);
    EXPECT_NEAR(b.coefficient("Z0"), -1.0, 1e-12);
    EXPECT_NEAR(b.coefficient("X0"), -0.8660254, 1e-7);
    auto a2 = square(a);
    EXPECT_NEAR(a2.coefficient("I"), 2.0, 1e-12);
    EXPECT_NEAR(a2.coefficient("X0"), 0.8660254, 1e-7);
    EXPECT_NEAR(a2.coefficient("Z0"), 1.0, 1e-12);
    auto b2 = square(b);
    EXPECT_NEAR(b2.coefficient("X0"), -0.8660254, 1e-7);
    EXPECT_NEAR(b2.coefficient("Z0"), -1.0, 1e-12);
}

TEST(Decompose, N7BlockA) {
    auto h = block_sum(7, Parity::A);
    EXPECT_EQ(to_text(h),
              "-0.5 I\n-2.82269491 X1\n-1 Z1\n-1.93649167 X0X1\n-1.93649167 Y0Y1\n-2 Z0\n0.531407059 Z0X1\n");
    auto h2 = square(h);
    EXPECT_NEAR(h2.coefficient("I"), 21.0, 1e-9);
    EXPECT_NEAR(h2.coefficient("Z0X1"), 10.7593726, 1e-7);
    EXPECT_NEAR(h2.coefficient("Z0Z1"), -3.5, 1e-9);
}

TEST(Decompose, SingleIdentityForOneByOne) {
    Eigen::MatrixXd m(1, 1);
    m << 2.5;
    auto s = decompose(m);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(to_text(s), "2.5 I\n");
}

TEST(Decompose, RejectsBadInput) {
    EXPECT_THROW(decompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3))), std::invalid_argument);
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_THROW(decompose(m), std::invalid_argument);
}

TEST(Decompose, RoundTripRandomHermitian) {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = trial % 2 == 0 ? 2 : 4;
        Eigen::MatrixXcd m = random_hermitian(dim, gen);
        Eigen::MatrixXcd back = reconstruct(decompose(m));
        EXPECT_LT((back - m).cwiseAbs().maxCoeff(), 1e-10) << "trial " << trial;
    }
}

TEST(Decompose, SymbolicSquareMatchesDense) {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = trial % 2 == 0 ? 2 : 4;
        Eigen::MatrixXcd m = random_hermitian(dim, gen);
        auto h = decompose(m);
        auto symbolic = square(h);
        auto dense = decompose(Eigen::MatrixXcd(m * m));
        EXPECT_LT(max_coefficient_difference(symbolic, dense), 1e-10);
    }
    for (int n : {3, 7}) {
        auto block = build_block(ModelParams{n, 1.0, 0.5, 0.2}, Parity::A);
        auto dense = decompose(square_block(block));
        EXPECT_LT(max_coefficient_difference(square(decompose(block.matrix)), dense), 1e-10);
    }
}

TEST(PauliSum, TextRoundTrip) {
    auto h = block_sum(7, Parity::A);
    auto parsed = parse_text("# comment\n\n" + to_text(h), 2);
    EXPECT_LT(max_coefficient_difference(h, parsed), 1e-8);
    EXPECT_THROW(parse_text("abc", 2), std::invalid_argument);
}

TEST(PauliSum, PrunesAndMerges) {
    PauliSum s(1);
    auto x = PauliString::from_text("X0", 1);
    s.add(x, 1.0);
    s.add(x, -1.0 + 1e-14);
    EXPECT_TRUE(s.empty());
    s.add(x, 0.25);
    s.add(x, 0.25);
    EXPECT_DOUBLE_EQ(s.coefficient(x), 0.5);
}

TEST(PauliSum, HermitianCheck) {
    ComplexPauliSum c(1);
    c.add(PauliString::from_text("Z0", 1), {1.0, 0.5});
    EXPECT_THROW(to_hermitian(c), std::logic_error);
}
