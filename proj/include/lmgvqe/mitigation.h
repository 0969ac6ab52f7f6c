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

#ifndef LMGVQE_MITIGATION_H
#define LMGVQE_MITIGATION_H

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lmgvqe/simulator.h"

namespace lmgvqe {

/// Column-stochastic readout calibration: matrix(i, j) = P(read i | prepared j), indexed by
/// basis state.
struct ConfusionMatrix {
    Eigen::MatrixXd matrix;
    int64_t shots_per_column = 0;

    unsigned num_qubits() const;
};

/// Raised when a calibration matrix cannot be inverted.
class UnmitigableError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Prepares each of the 2^n basis states with X gates and samples it under the readout
/// channel, one circuit per column. Supports 1 and 2 qubits.
ConfusionMatrix calibrate(unsigned num_qubits, const NoiseModel &noise, int64_t shots, uint64_t seed);

/// Solves cal * x = f for the quasi-distribution x, where f are the empirical frequencies.
/// Negative entries are kept.
///
/// Throws std::invalid_argument on dimension mismatch and UnmitigableError if the calibration
/// matrix is singular.
std::vector<double> mitigate_counts(const ShotResult &result, const ConfusionMatrix &cal);

/// Expectation of a Pauli string from readout-corrected counts. The standard error is the
/// multinomial delta-method error of the corrected linear estimator, which reduces to
/// sqrt((1 - mean^2) / shots) for an identity calibration.
ExpectationEstimate mitigated_expectation(const ShotResult &result, const ConfusionMatrix &cal,
                                          const PauliString &term);

struct FoldEstimate {
    int fold = 1;
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Linear fit of estimate against fold count, evaluated at fold = 0.
///
/// Points are weighted by 1/stderr^2 when every stderr is positive, uniformly otherwise; the
/// returned error propagates the point errors through the fitted intercept. For folds {1, 3}
/// this is (3 v1 - v3) / 2 with error sqrt(9 s1^2 + s3^2) / 2.
///
/// Throws std::invalid_argument for fewer than two points or repeated fold values.
ExpectationEstimate cnot_extrapolate(std::span<const FoldEstimate> values);

}  // namespace lmgvqe

#endif
