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

#ifndef LMGVQE_QUASISPIN_H
#define LMGVQE_QUASISPIN_H

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace lmgvqe {

/// A value in (1/2)Z, stored as twice its value so that j and m arithmetic is exact.
struct HalfInteger {
    int twice = 0;

    static constexpr HalfInteger from_twice(int t) {
        return HalfInteger{t};
    }
    constexpr double value() const {
        return 0.5 * twice;
    }
    constexpr bool operator==(const HalfInteger &) const = default;
    constexpr auto operator<=>(const HalfInteger &) const = default;
};

/// Parameters of the two-level Lipkin-Meshkov-Glick Hamiltonian
///     H = eps Jz + (V/2)(J+^2 + J-^2) + (W/2)(J+J- + J-J+).
struct ModelParams {
    int n_particles = 1;
    double eps = 1.0;
    double v = 0.0;
    double w = 0.0;

    /// Throws std::invalid_argument unless n_particles >= 1 and eps > 0.
    void validate() const;
};

enum class Parity { A, B };

std::string parity_name(Parity p);
Parity parse_parity(const std::string &text);

/// One parity block of the maximum-quasispin (j = N/2) Hamiltonian.
///
/// m_values ascend in steps of 2; row/column i of `matrix` is the state |j, m_values[i]>.
/// Block A is the block containing m = -j.
struct QuasispinBlock {
    HalfInteger j;
    std::vector<HalfInteger> m_values;
    Eigen::MatrixXd matrix;
    Parity parity = Parity::A;

    size_t dimension() const {
        return m_values.size();
    }
};

/// <j, m+2| (J+)^2 |j, m> = sqrt((j-m)(j+m+1)) * sqrt((j-m-1)(j+m+2)).
///
/// Throws std::domain_error when m or m+2 lies outside [-j, j], or when j-m is not integral.
double ladder_squared_element(HalfInteger j, HalfInteger m);

/// Builds both parity blocks. Off-diagonal entries carry the sign -(V/2) * ladder coefficient.
std::pair<QuasispinBlock, QuasispinBlock> build_blocks(const ModelParams &params);

/// Convenience accessor for one of the two blocks.
QuasispinBlock build_block(const ModelParams &params, Parity parity);

Eigen::MatrixXd square_block(const QuasispinBlock &block);

}  // namespace lmgvqe

#endif
