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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "experiment.h"
#include "lmgvqe/analysis.h"
#include "lmgvqe/optimizer.h"
#include "lmgvqe/pauli.h"
#include "lmgvqe/quasispin.h"

namespace py = pybind11;
using namespace lmgvqe;

namespace {

ModelParams model(int n, double eps, double v, double w) {
    ModelParams p{n, eps, v, w};
    p.validate();
    return p;
}

std::vector<std::pair<std::string, double>> terms(const PauliSum &sum) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto &[string, coeff] : sum.terms()) {
        out.emplace_back(string.str(), coeff);
    }
    return out;
}

PauliSum from_terms(const std::vector<std::pair<std::string, double>> &list, size_t num_qubits) {
    PauliSum sum(num_qubits);
    for (const auto &[label, coeff] : list) {
        sum.add(PauliString::from_text(label, num_qubits), coeff);
    }
    return sum;
}

EstimatorConfig estimator_config(const std::optional<int64_t> &shots, double readout, double cnot,
                                 const std::string &mitigate, std::vector<int> folds) {
    EstimatorConfig c;
    c.shots = shots ? ShotBudget::sampled(*shots) : ShotBudget::exact();
    c.noise = NoiseModel{readout, readout, cnot};
    c.mitigation = MitigationFlags::parse(mitigate);
    c.folds = std::move(folds);
    c.validate();
    return c;
}

py::dict estimation_dict(const EstimationResult &r) {
    py::dict d;
    d["energy"] = r.energy;
    d["energy_stderr"] = r.energy_stderr;
    d["h_squared"] = r.h_squared;
    d["variance"] = r.variance;
    d["variance_stderr"] = r.variance_stderr;
    return d;
}

}  // namespace

PYBIND11_MODULE(_lmgvqe, m) {
    m.doc() = "Variance-minimization eigensolver for the Lipkin-Meshkov-Glick model";

    py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "block_matrix",
        [](int n, const std::string &block, double eps, double v, double w) {
            return build_block(model(n, eps, v, w), parse_parity(block)).matrix;
        },
        py::arg("n"), py::arg("block"), py::arg("eps") = 1.0, py::arg("v") = 0.5, py::arg("w") = 0.0,
        "Dense parity block of the maximum-quasispin Hamiltonian.");

    m.def(
        "decompose", [](const Eigen::MatrixXd &matrix) { return terms(decompose(matrix)); }, py::arg("matrix"),
        "Pauli decomposition as (label, coefficient) pairs; qubit 0 is the most significant bit.");

    m.def(
        "square",
        [](const std::vector<std::pair<std::string, double>> &h, size_t num_qubits) {
            return terms(square(from_terms(h, num_qubits)));
        },
        py::arg("terms"), py::arg("num_qubits"));

    m.def(
        "eigensolve",
        [](const Eigen::MatrixXd &matrix) {
            auto e = eigensolve(matrix);
            return py::make_tuple(e.eigenvalues, e.eigenvectors);
        },
        py::arg("matrix"), "Jacobi eigensolver; eigenvalues ascending.");

    m.def(
        "estimate",
        [](int n, const std::string &block, std::vector<double> parameters, std::optional<int64_t> shots,
           double noise_readout, double noise_cnot, const std::string &mitigate, std::vector<int> folds,
           uint64_t seed) {
            auto b = build_block(model(n, 1.0, 0.5, 0.0), parse_parity(block));
            auto obs = VarianceObservables::from_hamiltonian(decompose(b.matrix));
            return estimation_dict(estimate(ansatz_for_dimension(b.dimension()), parameters, obs,
                                            estimator_config(shots, noise_readout, noise_cnot, mitigate, folds), seed));
        },
        py::arg("n"), py::arg("block"), py::arg("parameters"), py::arg("shots") = py::none(),
        py::arg("noise_readout") = 0.0, py::arg("noise_cnot") = 0.0, py::arg("mitigate") = "none",
        py::arg("folds") = std::vector<int>{1, 3}, py::arg("seed") = 1,
        "Energy and variance of the ansatz state for the V=0.5, W=0 model block.");

    m.def(
        "run_command",
        [](const std::string &command, const std::string &config_json) {
            cli::ExperimentConfig config;
            cli::apply_json(nlohmann::json::parse(config_json), config);
            config.validate();
            cli::CommandOutput out;
            if (command == "decompose") {
                out = cli::cmd_decompose(config);
            } else if (command == "sweep") {
                out = cli::cmd_sweep(config);
            } else if (command == "minimize") {
                out = cli::cmd_minimize(config);
            } else if (command == "spectrum") {
                out = cli::cmd_spectrum(config);
            } else if (command == "overlaps") {
                out = cli::cmd_overlaps(config);
            } else {
                throw cli::ConfigError("unknown command '" + command + "'");
            }
            return py::make_tuple(out.exit_code, out.console, out.files);
        },
        py::arg("command"), py::arg("config_json") = "{}",
        "Runs a CLI command in-process; returns (exit_code, console, files).");
}
