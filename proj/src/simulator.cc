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

#include "lmgvqe/simulator.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lmgvqe/rng.h"

namespace lmgvqe {

void NoiseModel::validate() const {
    auto in_unit = [](double p) { return p >= 0.0 && p < 1.0; };
    if (!in_unit(readout_p01) || !in_unit(readout_p10)) {
        throw std::invalid_argument("readout flip probabilities must lie in [0, 1)");
    }
    if (!(cnot_depolarizing >= 0.0 && cnot_depolarizing < 0.5)) {
        throw std::invalid_argument("CNOT depolarizing probability must lie in [0, 0.5)");
    }
}

std::string bitstring(uint64_t basis_index, unsigned num_qubits) {
    std::string bits(num_qubits, '0');
    for (unsigned q = 0; q < num_qubits; ++q) {
        if ((basis_index >> qubit_bit(q, num_qubits)) & 1) {
            bits[q] = '1';
        }
    }
    return bits;
}

uint64_t basis_index(const std::string &bits) {
    uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1: '" + bits + "'");
        }
        index = (index << 1) | static_cast<uint64_t>(c == '1');
    }
    return index;
}

std::vector<double> ShotResult::frequencies() const {
    std::vector<double> f(size_t{1} << num_qubits, 0.0);
    if (shots <= 0) {
        return f;
    }
    for (const auto &[bits, n] : counts) {
        f[basis_index(bits)] += static_cast<double>(n) / static_cast<double>(shots);
    }
    return f;
}

int parity_sign(uint64_t basis_index, const PauliString &term) {
    return std::popcount(basis_index & term.support_mask()) % 2 == 0 ? 1 : -1;
}

namespace {

// Error pattern: one entry per CNOT in gate order; 0 = no error, 1..15 = two-qubit Pauli with
// the control label in the high two bits and the target label in the low two bits.
using ErrorPattern = std::vector<uint8_t>;

Eigen::VectorXd final_distribution(const Circuit &circuit, std::span<const double> parameters,
                                   const PauliString *basis, const ErrorPattern *errors) {
    Statevector state(circuit.num_qubits());
    size_t cnot_index = 0;
    for (const auto &g : circuit.gates()) {
        state.apply(g, parameters);
        if (g.kind == GateKind::CNOT) {
            uint8_t e = errors ? (*errors)[cnot_index] : 0;
            ++cnot_index;
            if (e != 0) {
                state.apply_pauli(g.control, static_cast<Pauli>(e >> 2));
                state.apply_pauli(g.target, static_cast<Pauli>(e & 3));
            }
        }
    }
    if (basis) {
        for (unsigned q = 0; q < circuit.num_qubits(); ++q) {
            switch ((*basis)[q]) {
                case Pauli::X:
                    state.apply_ry(q, -std::numbers::pi / 2);
                    break;
                case Pauli::Y:
                    state.apply_rx(q, std::numbers::pi / 2);
                    break;
                default:
                    break;
            }
        }
    }
    return state.probabilities();
}

uint64_t draw(const Eigen::VectorXd &probabilities, Rng &rng) {
    double u = rng.uniform();
    double acc = 0.0;
    auto last = probabilities.size() - 1;
    for (Eigen::Index k = 0; k < last; ++k) {
        acc += probabilities(k);
        if (u < acc) {
            return static_cast<uint64_t>(k);
        }
    }
    return static_cast<uint64_t>(last);
}

uint64_t apply_readout(uint64_t outcome, unsigned num_qubits, const NoiseModel &noise, Rng &rng) {
    if (!noise.has_readout_noise()) {
        return outcome;
    }
    for (unsigned b = 0; b < num_qubits; ++b) {
        bool one = (outcome >> b) & 1;
        if (rng.bernoulli(one ? noise.readout_p10 : noise.readout_p01)) {
            outcome ^= uint64_t{1} << b;
        }
    }
    return outcome;
}

ShotResult sample(const Circuit &circuit, std::span<const double> parameters, const PauliString *basis,
                  int64_t shots, const NoiseModel &noise, uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (parameters.size() != circuit.num_parameters()) {
        throw std::invalid_argument("circuit takes " + std::to_string(circuit.num_parameters()) +
                                    " parameters, got " + std::to_string(parameters.size()));
    }
    noise.validate();

    Rng rng(seed);
    unsigned n = circuit.num_qubits();
    std::vector<int64_t> tally(size_t{1} << n, 0);
    size_t cnots = circuit.cnot_count();

    if (noise.cnot_depolarizing == 0.0 || cnots == 0) {
        Eigen::VectorXd p = final_distribution(circuit, parameters, basis, nullptr);
        for (int64_t s = 0; s < shots; ++s) {
            tally[apply_readout(draw(p, rng), n, noise, rng)]++;
        }
    } else {
        // Distinct error patterns are rare at small p, so their distributions are cached.
        std::map<ErrorPattern, Eigen::VectorXd> cache;
        ErrorPattern pattern(cnots);
        for (int64_t s = 0; s < shots; ++s) {
            for (auto &e : pattern) {
                e = rng.bernoulli(noise.cnot_depolarizing) ? static_cast<uint8_t>(1 + rng.below(15)) : 0;
            }
            auto it = cache.find(pattern);
            if (it == cache.end()) {
                it = cache.emplace(pattern, final_distribution(circuit, parameters, basis, &pattern)).first;
            }
            tally[apply_readout(draw(it->second, rng), n, noise, rng)]++;
        }
    }

    ShotResult result;
    result.num_qubits = n;
    result.shots = shots;
    for (size_t k = 0; k < tally.size(); ++k) {
        if (tally[k] > 0) {
            result.counts[bitstring(k, n)] = tally[k];
        }
    }
    return result;
}

}  // namespace

ShotResult sample_circuit(const Circuit &circuit, std::span<const double> parameters, int64_t shots,
                          const NoiseModel &noise, uint64_t seed) {
    return sample(circuit, parameters, nullptr, shots, noise, seed);
}

ShotResult measure_term(const Circuit &circuit, std::span<const double> parameters, const PauliString &term,
                        int64_t shots, const NoiseModel &noise, uint64_t seed) {
    if (term.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("term " + term.str() + " acts on " + std::to_string(term.num_qubits()) +
                                    " qubits but the circuit has " + std::to_string(circuit.num_qubits()));
    }
    return sample(circuit, parameters, &term, shots, noise, seed);
}

ExpectationEstimate expectation_from_counts(const ShotResult &result, const PauliString &term) {
    if (term.is_identity()) {
        return {1.0, 0.0};
    }
    if (result.shots <= 0) {
        throw std::invalid_argument("cannot estimate from an empty shot result");
    }
    double total = 0.0;
    for (const auto &[bits, n] : result.counts) {
        total += parity_sign(basis_index(bits), term) * static_cast<double>(n);
    }
    double mean = total / static_cast<double>(result.shots);
    double var = std::max(0.0, 1.0 - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(result.shots))};
}

}  // namespace lmgvqe
