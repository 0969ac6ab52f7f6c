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

#ifndef LMGVQE_CIRCUITS_H
#define LMGVQE_CIRCUITS_H

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lmgvqe/pauli.h"

namespace lmgvqe {

enum class GateKind { RY, X, CNOT };

struct Gate {
    GateKind kind = GateKind::X;
    unsigned target = 0;
    unsigned control = 0;  // CNOT only
    double angle = 0.0;    // RY only; ignored when parameter_slot is set
    std::optional<size_t> parameter_slot;

    static Gate ry(unsigned target, double angle);
    static Gate ry_param(unsigned target, size_t slot);
    static Gate x(unsigned target);
    static Gate cnot(unsigned control, unsigned target);

    bool operator==(const Gate &) const = default;
};

std::string gate_name(const Gate &gate);

/// Ordered gate list acting on |0...0>. Validated on construction and immutable afterwards.
class Circuit {
   public:
    /// Throws std::invalid_argument if a qubit index is out of range, a CNOT has control ==
    /// target, a non-RY gate carries a parameter slot, or the slots used are not 0..k-1.
    Circuit(unsigned num_qubits, std::vector<Gate> gates);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t num_parameters() const {
        return num_parameters_;
    }
    size_t cnot_count() const;

    std::string str() const;

   private:
    unsigned num_qubits_;
    std::vector<Gate> gates_;
    size_t num_parameters_ = 0;
};

/// Normalized amplitude vector over 2^n basis states, qubit 0 most significant.
class Statevector {
   public:
    explicit Statevector(unsigned num_qubits);
    /// Wraps explicit amplitudes. Throws std::invalid_argument unless the length is a power of
    /// two and the norm is 1 within 1e-9.
    explicit Statevector(Eigen::VectorXcd amplitudes);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    Eigen::Index dimension() const {
        return amplitudes_.size();
    }

    void apply_1q(unsigned qubit, const Eigen::Matrix2cd &u);
    void apply_ry(unsigned qubit, double angle);
    void apply_rx(unsigned qubit, double angle);
    void apply_x(unsigned qubit);
    void apply_cnot(unsigned control, unsigned target);
    void apply_pauli(unsigned qubit, Pauli p);
    void apply(const Gate &gate, std::span<const double> parameters);

    /// |amplitude|^2 per basis state.
    Eigen::VectorXd probabilities() const;
    /// Real parts; callers use this for ansatz states, which are real.
    Eigen::VectorXd real_amplitudes() const;

    double norm() const {
        return amplitudes_.norm();
    }

   private:
    unsigned num_qubits_;
    Eigen::VectorXcd amplitudes_;
};

/// RY(theta) = [[cos theta/2, -sin theta/2], [sin theta/2, cos theta/2]].
Eigen::Matrix2cd ry_matrix(double angle);

/// One qubit, RY(theta_0): cos(theta/2)|0> + sin(theta/2)|1>.
Circuit ansatz_1q();

/// Two qubits, three parameters:
///     RY(t0) q1; CNOT q1->q0; RY(t1) q0; CNOT q1->q0; RY(t2) q1.
Circuit ansatz_2q();

/// Smallest ansatz for a block of `dimension` (2 -> ansatz_1q, 4 -> ansatz_2q).
Circuit ansatz_for_dimension(size_t dimension);

/// Runs the circuit on |0...0>. Throws std::invalid_argument on a parameter count mismatch.
Statevector run(const Circuit &circuit, std::span<const double> parameters);

/// Replaces every CNOT with `fold` consecutive copies. Throws std::invalid_argument unless
/// fold is odd and positive.
Circuit fold_cnots(const Circuit &circuit, int fold);

}  // namespace lmgvqe

#endif
