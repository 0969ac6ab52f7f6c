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

#ifndef LMGVQE_SIMULATOR_H
#define LMGVQE_SIMULATOR_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lmgvqe/circuits.h"
#include "lmgvqe/pauli.h"

namespace lmgvqe {

/// Synthetic device noise.
///
/// Readout flips are independent per qubit. After every CNOT, with probability
/// cnot_depolarizing, one of the 15 non-identity two-qubit Paulis is applied to
/// (control, target), chosen uniformly.
struct NoiseModel {
    double readout_p01 = 0.0;  // P(read 1 | true 0)
    double readout_p10 = 0.0;  // P(read 0 | true 1)
    double cnot_depolarizing = 0.0;

    /// Throws std::invalid_argument if a probability is outside [0, 1) or p_cnot >= 0.5.
    void validate() const;
    bool is_noiseless() const {
        return readout_p01 == 0.0 && readout_p10 == 0.0 && cnot_depolarizing == 0.0;
    }
    bool has_readout_noise() const {
        return readout_p01 != 0.0 || readout_p10 != 0.0;
    }
};

/// Measured bitstring histogram. Bitstrings are written qubit 0 first.
struct ShotResult {
    unsigned num_qubits = 0;
    std::map<std::string, int64_t> counts;
    int64_t shots = 0;

    /// Empirical frequency per basis-state index.
    std::vector<double> frequencies() const;
};

std::string bitstring(uint64_t basis_index, unsigned num_qubits);
uint64_t basis_index(const std::string &bits);

struct ExpectationEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Samples `shots` bitstrings in the computational basis after the circuit, with per-shot
/// stochastic CNOT errors and readout flips. Deterministic for a fixed seed.
ShotResult sample_circuit(const Circuit &circuit, std::span<const double> parameters, int64_t shots,
                          const NoiseModel &noise, uint64_t seed);

/// Measures one Pauli string: appends the basis change for each non-identity position
/// (RY(-pi/2) for X, RX(pi/2) for Y), then samples as sample_circuit does.
///
/// Throws std::invalid_argument on a qubit-count mismatch or shots < 1.
ShotResult measure_term(const Circuit &circuit, std::span<const double> parameters, const PauliString &term,
                        int64_t shots, const NoiseModel &noise, uint64_t seed);

/// Eigenvalue-weighted mean of the term over the counts, with binomial standard error
/// sqrt((1 - mean^2) / shots). The identity string gives (1, 0).
ExpectationEstimate expectation_from_counts(const ShotResult &result, const PauliString &term);

/// Parity sign (+1/-1) of a basis state for the term's support.
int parity_sign(uint64_t basis_index, const PauliString &term);

}  // namespace lmgvqe

#endif
