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

#include "lmgvqe/estimator.h"

#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lmgvqe/mitigation.h"
#include "lmgvqe/rng.h"

namespace lmgvqe {

ShotBudget ShotBudget::sampled(int64_t shots) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1, got " + std::to_string(shots));
    }
    return ShotBudget(shots);
}

ShotBudget ShotBudget::parse(const std::string &text) {
    if (text == "exact" || text == "inf") {
        return exact();
    }
    size_t used = 0;
    long long n = 0;
    try {
        n = std::stoll(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw std::invalid_argument("shots must be a positive integer or 'exact', got '" + text + "'");
    }
    return sampled(n);
}

std::string ShotBudget::str() const {
    return is_exact() ? "exact" : std::to_string(shots_);
}

MitigationFlags MitigationFlags::parse(const std::string &text) {
    MitigationFlags flags;
    if (text.empty() || text == "none") {
        return flags;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "readout") {
            flags.readout = true;
        } else if (item == "cnot") {
            flags.cnot = true;
        } else if (item != "none" && !item.empty()) {
            throw std::invalid_argument("unknown mitigation '" + item + "' (expected readout, cnot)");
        }
    }
    return flags;
}

std::string MitigationFlags::str() const {
    if (readout && cnot) {
        return "readout,cnot";
    }
    if (readout) {
        return "readout";
    }
    return cnot ? "cnot" : "none";
}

void EstimatorConfig::validate() const {
    noise.validate();
    if (shots.is_exact()) {
        if (!noise.is_noiseless()) {
            throw std::invalid_argument("exact estimation is noiseless; drop the noise settings or set a shot count");
        }
        if (mitigation.any()) {
            throw std::invalid_argument("mitigation requires sampled estimation");
        }
    }
    if (calibration_shots < 0) {
        throw std::invalid_argument("calibration shots must be >= 0");
    }
    if (mitigation.cnot) {
        std::set<int> seen;
        for (int f : folds) {
            if (f < 1 || f % 2 == 0) {
                throw std::invalid_argument("fold factors must be odd and positive");
            }
            if (!seen.insert(f).second) {
                throw std::invalid_argument("fold factors must be distinct");
            }
        }
        if (seen.size() < 2) {
            throw std::invalid_argument("CNOT extrapolation needs at least two fold factors");
        }
    }
}

VarianceObservables VarianceObservables::from_hamiltonian(PauliSum h) {
    PauliSum h2 = square(h);
    return VarianceObservables(std::move(h), std::move(h2));
}

VarianceObservables::VarianceObservables(PauliSum h_, PauliSum h2_, double tolerance)
    : h(std::move(h_)), h2(std::move(h2_)) {
    if (h.num_qubits() != h2.num_qubits()) {
        throw std::invalid_argument("H and H^2 act on different qubit counts");
    }
    double diff = max_coefficient_difference(square(h), h2);
    if (diff > tolerance) {
        throw std::invalid_argument("supplied H^2 differs from H*H by " + std::to_string(diff));
    }
}

double expectation_exact(const Statevector &state, const PauliSum &observable) {
    if (state.num_qubits() != observable.num_qubits()) {
        throw std::invalid_argument("observable and state act on different qubit counts");
    }
    const auto &psi = state.amplitudes();
    double total = 0.0;
    for (const auto &[p, coeff] : observable.terms()) {
        uint64_t flip = p.flip_mask();
        std::complex<double> acc = 0.0;
        for (Eigen::Index b = 0; b < psi.size(); ++b) {
            auto c = static_cast<uint64_t>(b) ^ flip;
            acc += std::conj(psi(b)) * p.element(static_cast<uint64_t>(b), c) * psi(static_cast<Eigen::Index>(c));
        }
        total += coeff * acc.real();
    }
    return total;
}

namespace {

struct Accumulated {
    double value = 0.0;
    double variance = 0.0;
};

void accumulate_exact(const Statevector &state, const PauliSum &sum, bool from_h2, Accumulated &acc,
                      std::vector<TermEstimate> &per_term) {
    for (const auto &[p, coeff] : sum.terms()) {
        PauliSum single(sum.num_qubits());
        single.add(p, 1.0);
        double mean = p.is_identity() ? 1.0 : expectation_exact(state, single);
        acc.value += coeff * mean;
        per_term.push_back({p, coeff, mean, 0.0, from_h2});
    }
}

}  // namespace

EstimationResult estimate(const Circuit &circuit, std::span<const double> parameters,
                          const VarianceObservables &observables, const EstimatorConfig &config, uint64_t seed) {
    config.validate();
    if (observables.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("Hamiltonian acts on " + std::to_string(observables.num_qubits()) +
                                    " qubits but the circuit has " + std::to_string(circuit.num_qubits()));
    }
    if (parameters.size() != circuit.num_parameters()) {
        throw std::invalid_argument("circuit takes " + std::to_string(circuit.num_parameters()) +
                                    " parameters, got " + std::to_string(parameters.size()));
    }

    EstimationResult result;
    result.shots = config.shots;
    Accumulated e, e2;

    if (config.shots.is_exact()) {
        Statevector state = run(circuit, parameters);
        accumulate_exact(state, observables.h, false, e, result.per_term);
        accumulate_exact(state, observables.h2, true, e2, result.per_term);
    } else {
        bool use_cnot = config.mitigation.cnot && circuit.cnot_count() > 0;
        result.mitigation_applied.readout = config.mitigation.readout;
        result.mitigation_applied.cnot = use_cnot;

        std::optional<ConfusionMatrix> cal;
        if (config.mitigation.readout) {
            int64_t cal_shots = config.calibration_shots > 0 ? config.calibration_shots : config.shots.count();
            cal = calibrate(circuit.num_qubits(), config.noise, cal_shots, derive_seed(seed, {2}));
        }
        std::vector<int> folds = use_cnot ? config.folds : std::vector<int>{1};
        std::vector<Circuit> folded;
        for (int f : folds) {
            folded.push_back(fold_cnots(circuit, f));
        }

        uint64_t term_index = 0;
        auto measure_sum = [&](const PauliSum &sum, bool from_h2, Accumulated &acc) {
            for (const auto &[p, coeff] : sum.terms()) {
                if (p.is_identity()) {
                    acc.value += coeff;
                    result.per_term.push_back({p, coeff, 1.0, 0.0, from_h2});
                    continue;
                }
                std::vector<FoldEstimate> by_fold;
                for (size_t k = 0; k < folds.size(); ++k) {
                    auto shots = measure_term(folded[k], parameters, p, config.shots.count(), config.noise,
                                              derive_seed(seed, {1, term_index, static_cast<uint64_t>(folds[k])}));
                    auto est = cal ? mitigated_expectation(shots, *cal, p) : expectation_from_counts(shots, p);
                    by_fold.push_back({folds[k], est.mean, est.std_error});
                }
                ExpectationEstimate est = use_cnot ? cnot_extrapolate(by_fold)
                                                   : ExpectationEstimate{by_fold[0].estimate, by_fold[0].std_error};
                acc.value += coeff * est.mean;
                acc.variance += coeff * coeff * est.std_error * est.std_error;
                result.per_term.push_back({p, coeff, est.mean, est.std_error, from_h2});
                ++term_index;
            }
        };
        measure_sum(observables.h, false, e);
        measure_sum(observables.h2, true, e2);
    }

    result.energy = e.value;
    result.energy_stderr = std::sqrt(e.variance);
    result.h_squared = e2.value;
    result.h_squared_stderr = std::sqrt(e2.variance);
    result.variance = result.h_squared - result.energy * result.energy;
    result.variance_stderr =
        std::sqrt(e2.variance + 4.0 * result.energy * result.energy * e.variance);
    return result;
}

}  // namespace lmgvqe
