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

#include "lmgvqe/circuits.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lmgvqe {

using cdouble = std::complex<double>;

Gate Gate::ry(unsigned target, double angle) {
    Gate g;
    g.kind = GateKind::RY;
    g.target = target;
    g.angle = angle;
    return g;
}

Gate Gate::ry_param(unsigned target, size_t slot) {
    Gate g;
    g.kind = GateKind::RY;
    g.target = target;
    g.parameter_slot = slot;
    return g;
}

Gate Gate::x(unsigned target) {
    Gate g;
    g.kind = GateKind::X;
    g.target = target;
    return g;
}

Gate Gate::cnot(unsigned control, unsigned target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.control = control;
    g.target = target;
    return g;
}

std::string gate_name(const Gate &gate) {
    std::ostringstream out;
    switch (gate.kind) {
        case GateKind::RY:
            out << "RY(";
            if (gate.parameter_slot) {
                out << "theta" << *gate.parameter_slot;
            } else {
                out << gate.angle;
            }
            out << ") q" << gate.target;
            break;
        case GateKind::X:
            out << "X q" << gate.target;
            break;
        case GateKind::CNOT:
            out << "CNOT q" << gate.control << " -> q" << gate.target;
            break;
    }
    return out.str();
}

Circuit::Circuit(unsigned num_qubits, std::vector<Gate> gates) : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0 || num_qubits_ > 20) {
        throw std::invalid_argument("circuit qubit count must be in 1..20");
    }
    std::set<size_t> slots;
    for (const auto &g : gates_) {
        if (g.target >= num_qubits_ || (g.kind == GateKind::CNOT && g.control >= num_qubits_)) {
            throw std::invalid_argument("gate " + gate_name(g) + " addresses a qubit outside the register");
        }
        if (g.kind == GateKind::CNOT && g.control == g.target) {
            throw std::invalid_argument("CNOT control and target coincide");
        }
        if (g.parameter_slot) {
            if (g.kind != GateKind::RY) {
                throw std::invalid_argument("only RY gates take parameters");
            }
            slots.insert(*g.parameter_slot);
        }
    }
    num_parameters_ = slots.size();
    if (!slots.empty() && *slots.rbegin() != slots.size() - 1) {
        throw std::invalid_argument("parameter slots must be 0..k-1 without gaps");
    }
}

size_t Circuit::cnot_count() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind == GateKind::CNOT; }));
}

std::string Circuit::str() const {
    std::ostringstream out;
    for (const auto &g : gates_) {
        out << gate_name(g) << '\n';
    }
    return out.str();
}

Statevector::Statevector(unsigned num_qubits)
    : num_qubits_(num_qubits), amplitudes_(Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits)) {
    amplitudes_(0) = 1.0;
}

Statevector::Statevector(Eigen::VectorXcd amplitudes) : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    auto n = amplitudes_.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("statevector length must be a power of two >= 2");
    }
    while ((Eigen::Index{1} << num_qubits_) < n) {
        ++num_qubits_;
    }
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("statevector is not normalized");
    }
}

Eigen::Matrix2cd ry_matrix(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Eigen::Matrix2cd u;
    u << c, -s, s, c;
    return u;
}

void Statevector::apply_1q(unsigned qubit, const Eigen::Matrix2cd &u) {
    auto stride = Eigen::Index{1} << qubit_bit(qubit, num_qubits_);
    for (Eigen::Index b = 0; b < amplitudes_.size(); ++b) {
        if (b & stride) {
            continue;
        }
        cdouble a0 = amplitudes_(b);
        cdouble a1 = amplitudes_(b | stride);
        amplitudes_(b) = u(0, 0) * a0 + u(0, 1) * a1;
        amplitudes_(b | stride) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void Statevector::apply_ry(unsigned qubit, double angle) {
    apply_1q(qubit, ry_matrix(angle));
}

void Statevector::apply_rx(unsigned qubit, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Eigen::Matrix2cd u;
    u << c, cdouble(0, -s), cdouble(0, -s), c;
    apply_1q(qubit, u);
}

void Statevector::apply_x(unsigned qubit) {
    auto stride = Eigen::Index{1} << qubit_bit(qubit, num_qubits_);
    for (Eigen::Index b = 0; b < amplitudes_.size(); ++b) {
        if (!(b & stride)) {
            std::swap(amplitudes_(b), amplitudes_(b | stride));
        }
    }
}

void Statevector::apply_cnot(unsigned control, unsigned target) {
    auto cbit = Eigen::Index{1} << qubit_bit(control, num_qubits_);
    auto tbit = Eigen::Index{1} << qubit_bit(target, num_qubits_);
    for (Eigen::Index b = 0; b < amplitudes_.size(); ++b) {
        if ((b & cbit) && !(b & tbit)) {
            std::swap(amplitudes_(b), amplitudes_(b | tbit));
        }
    }
}

void Statevector::apply_pauli(unsigned qubit, Pauli p) {
    auto stride = Eigen::Index{1} << qubit_bit(qubit, num_qubits_);
    switch (p) {
        case Pauli::I:
            return;
        case Pauli::X:
            apply_x(qubit);
            return;
        case Pauli::Y:
            for (Eigen::Index b = 0; b < amplitudes_.size(); ++b) {
                if (!(b & stride)) {
                    cdouble a0 = amplitudes_(b);
                    cdouble a1 = amplitudes_(b | stride);
                    amplitudes_(b) = cdouble(0, -1) * a1;
                    amplitudes_(b | stride) = cdouble(0, 1) * a0;
                }
            }
            return;
        case Pauli::Z:
            for (Eigen::Index b = 0; b < amplitudes_.size(); ++b) {
                if (b & stride) {
                    amplitudes_(b) = -amplitudes_(b);
                }
            }
            return;
    }
}

void Statevector::apply(const Gate &gate, std::span<const double> parameters) {
    switch (gate.kind) {
        case GateKind::RY:
            apply_ry(gate.target, gate.parameter_slot ? parameters[*gate.parameter_slot] : gate.angle);
            return;
        case GateKind::X:
            apply_x(gate.target);
            return;
        case GateKind::CNOT:
            apply_cnot(gate.control, gate.target);
            return;
    }
}

Eigen::VectorXd Statevector::probabilities() const {
    return amplitudes_.cwiseAbs2();
}

Eigen::VectorXd Statevector::real_amplitudes() const {
    return amplitudes_.real();
}

Circuit ansatz_1q() {
    return Circuit(1, {Gate::ry_param(0, 0)});
}

Circuit ansatz_2q() {
    return Circuit(2, {
                          Gate::ry_param(1, 0),
                          Gate::cnot(1, 0),
                          Gate::ry_param(0, 1),
                          Gate::cnot(1, 0),
                          Gate::ry_param(1, 2),
                      });
}

Circuit ansatz_for_dimension(size_t dimension) {
    switch (dimension) {
        case 2:
            return ansatz_1q();
        case 4:
            return ansatz_2q();
        default:
            throw std::invalid_argument("no built-in ansatz for block dimension " + std::to_string(dimension));
    }
}

Statevector run(const Circuit &circuit, std::span<const double> parameters) {
    if (parameters.size() != circuit.num_parameters()) {
        throw std::invalid_argument("circuit takes " + std::to_string(circuit.num_parameters()) +
                                    " parameters, got " + std::to_string(parameters.size()));
    }
    Statevector state(circuit.num_qubits());
    for (const auto &g : circuit.gates()) {
        state.apply(g, parameters);
    }
    return state;
}

Circuit fold_cnots(const Circuit &circuit, int fold) {
    if (fold < 1 || fold % 2 == 0) {
        throw std::invalid_argument("CNOT fold factor must be an odd positive integer, got " + std::to_string(fold));
    }
    std::vector<Gate> gates;
    for (const auto &g : circuit.gates()) {
        int copies = g.kind == GateKind::CNOT ? fold : 1;
        for (int k = 0; k < copies; ++k) {
            gates.push_back(g);
        }
    }
    return Circuit(circuit.num_qubits(), std::move(gates));
}

}  // namespace lmgvqe
