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


#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "experiment.h"

using lmgvqe::cli::ConfigError;
using lmgvqe::cli::ExperimentConfig;

namespace {

struct Overrides {
    std::optional<int> n;
    std::optional<double> eps, v, w;
    std::optional<std::string> block, ansatz, shots, mitigate, format, out, config;
    std::optional<uint64_t> seed;
    std::optional<double> noise_readout, noise_cnot;
    std::optional<std::vector<int>> folds;
    std::optional<int> starts, steps, max_evaluations;
    std::optional<std::vector<double>> fixed, initial;
};

void add_options(CLI::App &app, Overrides &o) {
    app.add_option("--config", o.config, "JSON config file; flags override its values");
    app.add_option("--n", o.n, "Number of particles N");
    app.add_option("--eps", o.eps, "Single-particle energy");
    app.add_option("--v", o.v, "Pair-excitation strength V");
    app.add_option("--w", o.w, "Scattering strength W");
    app.add_option("--block", o.block, "A, B or both");
    app.add_option("--ansatz", o.ansatz, "auto, 1q or 2q");
    app.add_option("--shots", o.shots, "Shots per term, or 'exact'");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--noise-readout", o.noise_readout, "Symmetric readout flip probability");
    app.add_option("--noise-cnot", o.noise_cnot, "Two-qubit depolarizing probability per CNOT");
    app.add_option("--mitigate", o.mitigate, "none, readout, cnot or readout,cnot");
    app.add_option("--folds", o.folds, "Odd CNOT fold factors for extrapolation")->delimiter(',');
    app.add_option("--starts", o.starts, "Multistart count (0: 10 per block dimension)");
    app.add_option("--steps", o.steps, "Sweep grid points");
    app.add_option("--max-evaluations", o.max_evaluations, "Evaluation budget per run");
    app.add_option("--fixed", o.fixed, "Values for every ansatz slot in a sweep")->delimiter(',');
    app.add_option("--initial", o.initial, "Starting parameters for minimize")->delimiter(',');
    app.add_option("--out", o.out, "Directory for output files");
    app.add_option("--format", o.format, "csv or json");
}

ExperimentConfig resolve(const Overrides &o) {
    ExperimentConfig config;
    if (o.config) {
        std::ifstream f(*o.config);
        if (!f) {
            throw ConfigError("cannot read config file " + *o.config);
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(f);
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("bad config file: ") + e.what());
        }
        lmgvqe::cli::apply_json(doc, config);
    }
    nlohmann::json doc = nlohmann::json::object();
    nlohmann::json model = nlohmann::json::object();
    if (o.n) model["n"] = *o.n;
    if (o.eps) model["eps"] = *o.eps;
    if (o.v) model["v"] = *o.v;
    if (o.w) model["w"] = *o.w;
    if (!model.empty()) doc["model"] = model;
    if (o.block) doc["block"] = *o.block == "both" ? nlohmann::json(nullptr) : nlohmann::json(*o.block);
    if (o.ansatz) doc["ansatz"] = *o.ansatz;
    if (o.shots) doc["shots"] = *o.shots;
    if (o.seed) doc["seed"] = *o.seed;
    if (o.noise_readout || o.noise_cnot) {
        nlohmann::json noise = nlohmann::json::object();
        if (o.noise_readout) {
            noise["readout_p01"] = *o.noise_readout;
            noise["readout_p10"] = *o.noise_readout;
        }
        if (o.noise_cnot) noise["cnot_depolarizing"] = *o.noise_cnot;
        doc["noise"] = noise;
    }
    if (o.mitigate) doc["mitigation"] = *o.mitigate;
    if (o.folds) doc["folds"] = *o.folds;
    if (o.starts) doc["starts"] = *o.starts;
    if (o.steps) doc["steps"] = *o.steps;
    if (o.max_evaluations) doc["max_evaluations"] = *o.max_evaluations;
    if (o.fixed) doc["fixed_parameters"] = *o.fixed;
    if (o.initial) doc["initial_parameters"] = *o.initial;
    if (o.format) doc["format"] = *o.format;
    if (o.out) doc["out"] = *o.out;
    lmgvqe::cli::apply_json(doc, config);
    config.validate();
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variance-minimization eigensolver for the Lipkin-Meshkov-Glick model"};
    app.require_subcommand(1);
    Overrides overrides;
    add_options(app, overrides);

    using Command = lmgvqe::cli::CommandOutput (*)(const ExperimentConfig &);
    const std::pair<const char *, Command> commands[] = {
        {"decompose", lmgvqe::cli::cmd_decompose},
        {"sweep", lmgvqe::cli::cmd_sweep},
        {"minimize", lmgvqe::cli::cmd_minimize},
        {"spectrum", lmgvqe::cli::cmd_spectrum},
        {"overlaps", lmgvqe::cli::cmd_overlaps},
    };
    const char *help[] = {
        "Print block matrices and their Pauli decompositions",
        "Energy and variance over a one-parameter angle grid",
        "One variance-minimization run with its full trace",
        "Multistart spectrum discovery; exit 3 if an eigenvalue is missed",
        "Spectrum discovery plus fidelity table against exact eigenvectors",
    };
    std::vector<CLI::App *> subs;
    for (size_t i = 0; i < std::size(commands); ++i) {
        subs.push_back(app.add_subcommand(commands[i].first, help[i])->fallthrough());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : lmgvqe::cli::kExitConfig;
    }

    try {
        ExperimentConfig config = resolve(overrides);
        for (size_t i = 0; i < subs.size(); ++i) {
            if (subs[i]->parsed()) {
                auto output = commands[i].second(config);
                if (config.out) {
                    lmgvqe::cli::write_files(output, *config.out);
                }
                std::cout << output.console;
                if (output.exit_code == lmgvqe::cli::kExitIncomplete) {
                    std::cerr << "spectrum incomplete: not every exact eigenvalue was found\n";
                }
                return output.exit_code;
            }
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return lmgvqe::cli::kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
