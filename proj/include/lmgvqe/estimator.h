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

#ifndef LMGVQE_ESTIMATOR_H
#define LMGVQE_ESTIMATOR_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lmgvqe/circuits.h"
#include "lmgvqe/pauli.h"
#include "lmgvqe/simulator.h"

namespace lmgvqe {

/// Either a finite number of shots per measured term, or exact (infinite-shot) evaluation
/// from the statevector.
class ShotBudget {
   public:
    static ShotBudget exact() {
        return ShotBudget(0);
    }
    /// Throws std::invalid_argument for shots < 1.
    static ShotBudget sampled(int64_t shots);
    /// "exact" or a positive integer.
    static ShotBudget parse(const std::string &text);

    bool is_exact() const {
        return shots_ == 0;
    }
    /// Shots per term; 0 in exact mode.
    int64_t count() const {
        return shots_;
    }
    std::string str() const;

    bool operator==(const ShotBudget &) const = default;

   private:
    explicit ShotBudget(int64_t shots) : shots_(shots) {
    }
    int64_t shots_;
};

struct MitigationFlags {
    bool readout = false;
    bool cnot = false;

    bool any() const {
        return readout || cnot;
    }
    /// Comma-separated list of "readout", "cnot"; "" or "none" for no mitigation.
    static MitigationFlags parse(const std::string &text);
    std::string str() const;

    bool operator==(const MitigationFlags &) const = default;
};

struct EstimatorConfig {
    ShotBudget shots = ShotBudget::exact();
    NoiseModel noise;
    MitigationFlags mitigation;
    /// Fold factors used by CNOT extrapolation.
    std::vector<int> folds{1, 3};
    /// Shots per readout calibration circuit; 0 means the same as `shots`.
    int64_t calibration_shots = 0;

    /// Throws std::invalid_argument for noise or mitigation requested in exact mode, invalid
    /// probabilities, or an unusable fold list.
    void validate() const;
};

/// A Hamiltonian and its square, checked against each other once at construction.
struct VarianceObservables {
    PauliSum h;
    PauliSum h2;

    /// h2 computed symbolically as h * h.
    static VarianceObservables from_hamiltonian(PauliSum h);

    /// Accepts a caller-supplied square. Throws std::invalid_argument if it differs from the
    /// symbolic square by more than `tolerance` in any coefficient.
    VarianceObservables(PauliSum h, PauliSum h2, double tolerance = 1e-9);

    size_t num_qubits() const {
        return h.num_qubits();
    }
};

struct TermEstimate {
    PauliString term;
    double coefficient = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    bool from_h2 = false;
};

/// Energy, <H^2> and variance = <H^2> - <H>^2, with first-order propagated errors.
struct EstimationResult {
    double energy = 0.0;
    double energy_stderr = 0.0;
    double h_squared = 0.0;
    double h_squared_stderr = 0.0;
    double variance = 0.0;
    double variance_stderr = 0.0;
    std::vector<TermEstimate> per_term;
    ShotBudget shots = ShotBudget::exact();
    MitigationFlags mitigation_applied;
};

/// <psi| O |psi> = sum_i beta_i <psi|P_i|psi>. Throws std::invalid_argument on a qubit mismatch.
double expectation_exact(const Statevector &state, const PauliSum &observable);

/// Measures every non-identity term of h and h2 on its own circuit, applying the requested
/// mitigations: readout correction per fold first, then linear CNOT extrapolation across folds.
/// Identity terms contribute their coefficient exactly. Exact mode evaluates the statevector.
///
/// The sampled variance can come out negative.
EstimationResult estimate(const Circuit &circuit, std::span<const double> parameters,
                          const VarianceObservables &observables, const EstimatorConfig &config, uint64_t seed);

}  // namespace lmgvqe

#endif
