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

#include "lmgvqe/mitigation.h"

#include <cmath>
#include <set>

#include "lmgvqe/rng.h"

namespace lmgvqe {

unsigned ConfusionMatrix::num_qubits() const {
    unsigned n = 0;
    while ((Eigen::Index{1} << n) < matrix.rows()) {
        ++n;
    }
    return n;
}

ConfusionMatrix calibrate(unsigned num_qubits, const NoiseModel &noise, int64_t shots, uint64_t seed) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw std::invalid_argument("readout calibration supports 1 or 2 qubits");
    }
    if (shots < 1) {
        throw std::invalid_argument("calibration shots must be >= 1");
    }
    NoiseModel readout_only = noise;
    readout_only.cnot_depolarizing = 0.0;

    auto dim = Eigen::Index{1} << num_qubits;
    ConfusionMatrix cal;
    cal.shots_per_column = shots;
    cal.matrix = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index prepared = 0; prepared < dim; ++prepared) {
        std::vector<Gate> gates;
        for (unsigned q = 0; q < num_qubits; ++q) {
            if ((prepared >> qubit_bit(q, num_qubits)) & 1) {
                gates.push_back(Gate::x(q));
            }
        }
        Circuit prep(num_qubits, std::move(gates));
        auto result = sample_circuit(prep, {}, shots, readout_only,
                                     derive_seed(seed, {static_cast<uint64_t>(prepared)}));
        auto f = result.frequencies();
        for (Eigen::Index i = 0; i < dim; ++i) {
            cal.matrix(i, prepared) = f[static_cast<size_t>(i)];
        }
    }
    return cal;
}

namespace {

Eigen::FullPivLU<Eigen::MatrixXd> factor(const ConfusionMatrix &cal, Eigen::Index dim) {
    if (cal.matrix.rows() != dim || cal.matrix.cols() != dim) {
        throw std::invalid_argument("calibration matrix does not match the measured register");
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cal.matrix);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible()) {
        throw UnmitigableError("readout calibration matrix is singular");
    }
    return lu;
}

}  // namespace

std::vector<double> mitigate_counts(const ShotResult &result, const ConfusionMatrix &cal) {
    auto f = result.frequencies();
    auto dim = static_cast<Eigen::Index>(f.size());
    auto lu = factor(cal, dim);
    Eigen::VectorXd x = lu.solve(Eigen::Map<const Eigen::VectorXd>(f.data(), dim));
    return {x.data(), x.data() + x.size()};
}

ExpectationEstimate mitigated_expectation(const ShotResult &result, const ConfusionMatrix &cal,
                                          const PauliString &term) {
    if (term.is_identity()) {
        return {1.0, 0.0};
    }
    auto f = result.frequencies();
    auto dim = static_cast<Eigen::Index>(f.size());
    factor(cal, dim);

    // mean = s^T C^{-1} f = w^T f with w = C^{-T} s.
    Eigen::VectorXd signs(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        signs(k) = parity_sign(static_cast<uint64_t>(k), term);
    }
    Eigen::VectorXd w = cal.matrix.transpose().fullPivLu().solve(signs);
    Eigen::Map<const Eigen::VectorXd> freq(f.data(), dim);
    double mean = w.dot(freq);
    double second = w.cwiseAbs2().dot(freq);
    double var = std::max(0.0, second - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(result.shots))};
}

ExpectationEstimate cnot_extrapolate(std::span<const FoldEstimate> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("extrapolation needs at least two fold values");
    }
    std::set<int> folds;
    bool weighted = true;
    for (const auto &v : values) {
        if (!folds.insert(v.fold).second) {
            throw std::invalid_argument("duplicate fold value " + std::to_string(v.fold));
        }
        weighted = weighted && v.std_error > 0.0;
    }

    double s = 0, sx = 0, sxx = 0;
    for (const auto &v : values) {
        double w = weighted ? 1.0 / (v.std_error * v.std_error) : 1.0;
        s += w;
        sx += w * v.fold;
        sxx += w * v.fold * v.fold;
    }
    double det = s * sxx - sx * sx;
    // Intercept = sum_i c_i v_i with c_i = w_i (sxx - x_i sx) / det.
    double intercept = 0.0;
    double var = 0.0;
    for (const auto &v : values) {
        double w = weighted ? 1.0 / (v.std_error * v.std_error) : 1.0;
        double c = w * (sxx - v.fold * sx) / det;
        intercept += c * v.estimate;
        var += c * c * v.std_error * v.std_error;
    }
    return {intercept, std::sqrt(var)};
}

}  // namespace lmgvqe
