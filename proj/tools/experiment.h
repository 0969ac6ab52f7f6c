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

#ifndef LMGVQE_TOOLS_EXPERIMENT_H
#define LMGVQE_TOOLS_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lmgvqe/estimator.h"
#include "lmgvqe/quasispin.h"

namespace lmgvqe::cli {

inline constexpr int kFormatVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIncomplete = 3;

/// Invalid experiment configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class AnsatzChoice { Auto, OneQubit, TwoQubit };
enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
    ModelParams model{3, 1.0, 0.5, 0.0};
    /// Unset means both blocks.
    std::optional<Parity> block;
    AnsatzChoice ansatz = AnsatzChoice::Auto;
    ShotBudget shots = ShotBudget::exact();
    NoiseModel noise;
    MitigationFlags mitigation;
    std::vector<int> folds{1, 3};
    /// Multistart count; 0 means 10 per block dimension.
    int starts = 0;
    int steps = 50;
    uint64_t seed = 1;
    int max_evaluations = 600;
    /// Values for every slot of a multi-parameter sweep.
    std::vector<double> fixed_parameters;
    /// Starting point for `minimize`; drawn from the seed when empty.
    std::vector<double> initial_parameters;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> out;

    /// Throws ConfigError.
    void validate() const;

    std::vector<Parity> blocks() const;
    EstimatorConfig estimator_config() const;
    /// Ansatz for a block of the given dimension; throws ConfigError on a mismatch.
    Circuit circuit_for(size_t dimension) const;
    size_t starts_for(size_t dimension) const;
};

/// JSON form mirroring ExperimentConfig. Keys absent from the document keep the values
/// already in `config`.
void apply_json(const nlohmann::json &doc, ExperimentConfig &config);
nlohmann::json to_json(const ExperimentConfig &config);

/// Files keyed by relative path, plus what goes to stdout.
struct CommandOutput {
    int exit_code = kExitOk;
    std::string console;
    std::map<std::string, std::string> files;
};

CommandOutput cmd_decompose(const ExperimentConfig &config);
CommandOutput cmd_sweep(const ExperimentConfig &config);
CommandOutput cmd_minimize(const ExperimentConfig &config);
CommandOutput cmd_spectrum(const ExperimentConfig &config);
CommandOutput cmd_overlaps(const ExperimentConfig &config);

/// Writes every file under `directory`, creating it (and subdirectories) as needed.
void write_files(const CommandOutput &output, const std::string &directory);

/// 9 significant digits.
std::string format_number(double value);

}  // namespace lmgvqe::cli

#endif
