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

#include "experiment.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lmgvqe/analysis.h"
#include "lmgvqe/optimizer.h"
#include "lmgvqe/pauli.h"
#include "lmgvqe/rng.h"

namespace lmgvqe::cli {

using nlohmann::json;

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

namespace {

json num(double value) {
    return std::stod(format_number(value));
}

json nums(const std::vector<double> &values) {
    json out = json::array();
    for (double v : values) {
        out.push_back(num(v));
    }
    return out;
}

std::string ansatz_name(AnsatzChoice a) {
    switch (a) {
        case AnsatzChoice::OneQubit:
            return "1q";
        case AnsatzChoice::TwoQubit:
            return "2q";
        default:
            return "auto";
    }
}

AnsatzChoice parse_ansatz(const std::string &text) {
    if (text == "auto") {
        return AnsatzChoice::Auto;
    }
    if (text == "1q") {
        return AnsatzChoice::OneQubit;
    }
    if (text == "2q") {
        return AnsatzChoice::TwoQubit;
    }
    throw ConfigError("ansatz must be auto, 1q or 2q, got '" + text + "'");
}

OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("format must be csv or json, got '" + text + "'");
}

// Converts library argument errors raised while interpreting a config into ConfigError.
template <typename F>
auto as_config_error(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    } catch (const std::domain_error &e) {
        throw ConfigError(e.what());
    }
}

std::string ordinal_label(size_t rank) {
    if (rank == 0) {
        return "ground";
    }
    static const char *kSuffix[] = {"th", "st", "nd", "rd"};
    size_t mod100 = rank % 100;
    size_t mod10 = rank % 10;
    const char *suffix = (mod100 >= 11 && mod100 <= 13) || mod10 > 3 ? "th" : kSuffix[mod10];
    return std::to_string(rank) + suffix;
}

// Reference hardware measurements for the V/eps = 0.5, W = 0 model: exact value, measured
// variance, measured energy and its uncertainty. Reported beside results, never compared.
struct HardwareReference {
    int n;
    double exact;
    double variance;
    double energy;
    double uncertainty;
};

constexpr HardwareReference kHardwareReference[] = {
    {3, -1.823, 0.073, -1.788, 0.062}, {3, -0.823, -0.004, -0.816, 0.063}, {3, 0.823, 0.001, 0.826, 0.064},
    {3, 1.823, 0.001, 1.810, 0.063},   {7, -6.208, 0.139, -6.067, 0.901},  {7, -2.944, 0.016, -3.151, 0.503},
    {7, 1.208, 0.010, 1.184, 0.484},   {7, 5.944, 0.114, 5.902, 0.660},
};

const HardwareReference *find_reference(const ModelParams &model, double exact) {
    if (model.eps != 1.0 || model.v != 0.5 || model.w != 0.0) {
        return nullptr;
    }
    for (const auto &r : kHardwareReference) {
        if (r.n == model.n_particles && std::abs(r.exact - exact) < 1e-3) {
            return &r;
        }
    }
    return nullptr;
}

struct BlockSetup {
    Parity parity;
    QuasispinBlock block;
    Circuit circuit;
    VarianceObservables observables;
    uint64_t seed;
};

std::vector<BlockSetup> setup_blocks(const ExperimentConfig &config) {
    config.validate();
    std::vector<BlockSetup> out;
    auto [a, b] = as_config_error([&] { return build_blocks(config.model); });
    for (Parity p : config.blocks()) {
        QuasispinBlock block = p == Parity::A ? a : b;
        Circuit circuit = config.circuit_for(block.dimension());
        auto observables = VarianceObservables::from_hamiltonian(decompose(block.matrix));
        uint64_t seed = derive_seed(config.seed, {static_cast<uint64_t>(p)});
        out.push_back({p, std::move(block), std::move(circuit), std::move(observables), seed});
    }
    return out;
}

OptimizerOptions optimizer_options(const ExperimentConfig &config) {
    OptimizerOptions options;
    options.max_evaluations = config.max_evaluations;
    return options;
}

json estimation_json(const EstimationResult &r) {
    json terms = json::array();
    for (const auto &t : r.per_term) {
        terms.push_back({{"term", t.term.str()},
                         {"observable", t.from_h2 ? "H2" : "H"},
                         {"coefficient", num(t.coefficient)},
                         {"mean", num(t.mean)},
                         {"stderr", num(t.std_error)}});
    }
    return {{"energy", num(r.energy)},
            {"energy_stderr", num(r.energy_stderr)},
            {"h_squared", num(r.h_squared)},
            {"h_squared_stderr", num(r.h_squared_stderr)},
            {"variance", num(r.variance)},
            {"variance_stderr", num(r.variance_stderr)},
            {"shots", r.shots.str()},
            {"mitigation", r.mitigation_applied.str()},
            {"per_term", terms}};
}

json trace_json(const RunTrace &trace) {
    json iterations = json::array();
    for (const auto &e : trace.iterations) {
        iterations.push_back({{"parameters", nums(e.parameters)},
                              {"energy", num(e.energy)},
                              {"energy_stderr", num(e.energy_stderr)},
                              {"variance", num(e.variance)},
                              {"variance_stderr", num(e.variance_stderr)},
                              {"best_variance", num(e.best_variance)}});
    }
    return {{"seed", trace.seed},
            {"converged", trace.converged},
            {"stop_reason", trace.stop_reason},
            {"evaluations", trace.iterations.size()},
            {"final_parameters", nums(trace.final_parameters)},
            {"final", estimation_json(trace.final)},
            {"iterations", iterations}};
}

std::string trace_csv(const RunTrace &trace) {
    std::ostringstream out;
    out << "iteration";
    size_t k = trace.iterations.empty() ? 0 : trace.iterations.front().parameters.size();
    for (size_t i = 0; i < k; ++i) {
        out << ",theta" << i;
    }
    out << ",energy,variance,energy_stderr,variance_stderr,best_variance\n";
    for (size_t it = 0; it < trace.iterations.size(); ++it) {
        const auto &e = trace.iterations[it];
        out << it;
        for (double x : e.parameters) {
            out << ',' << format_number(x);
        }
        out << ',' << format_number(e.energy) << ',' << format_number(e.variance) << ','
            << format_number(e.energy_stderr) << ',' << format_number(e.variance_stderr) << ','
            << format_number(e.best_variance) << '\n';
    }
    return out.str();
}

json header(const std::string &command, const ExperimentConfig &config) {
    return {{"format_version", kFormatVersion}, {"command", command}, {"config", to_json(config)}};
}

void write_matrix(std::ostream &out, const Eigen::MatrixXd &m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << format_number(m(r, c));
        }
        out << '\n';
    }
}

struct BlockSpectrum {
    const BlockSetup *setup;
    SpectrumReport report;
    EigenDecomposition oracle;
};

std::vector<BlockSpectrum> run_spectra(const std::vector<BlockSetup> &blocks, const ExperimentConfig &config) {
    std::vector<BlockSpectrum> out;
    for (const auto &b : blocks) {
        auto report = discover_spectrum(b.observables, b.circuit, config.starts_for(b.block.dimension()),
                                        config.estimator_config(), optimizer_options(config), b.seed);
        out.push_back({&b, std::move(report), eigensolve(b.block.matrix)});
    }
    return out;
}

// Rank of `value` among all oracle eigenvalues of the processed blocks.
size_t global_rank(const std::vector<BlockSpectrum> &spectra, double value) {
    size_t rank = 0;
    for (const auto &s : spectra) {
        for (double lambda : s.report.oracle_eigenvalues) {
            if (lambda < value - 1e-9) {
                ++rank;
            }
        }
    }
    return rank;
}

std::optional<double> matched_eigenvalue(const SpectrumReport &report, size_t cluster) {
    for (size_t k = 0; k < report.matches.size(); ++k) {
        if (report.matches[k] && *report.matches[k] == cluster) {
            return report.oracle_eigenvalues[k];
        }
    }
    return std::nullopt;
}

std::string cluster_label(const std::vector<BlockSpectrum> &spectra, const SpectrumReport &report, size_t cluster) {
    auto lambda = matched_eigenvalue(report, cluster);
    return lambda ? ordinal_label(global_rank(spectra, *lambda)) : "unmatched";
}

}  // namespace

void ExperimentConfig::validate() const {
    as_config_error([&] {
        model.validate();
        estimator_config().validate();
        return 0;
    });
    if (steps < 1) {
        throw ConfigError("steps must be >= 1");
    }
    if (starts < 0) {
        throw ConfigError("starts must be >= 0");
    }
    if (max_evaluations < 1) {
        throw ConfigError("max_evaluations must be >= 1");
    }
}

std::vector<Parity> ExperimentConfig::blocks() const {
    if (block) {
        return {*block};
    }
    return {Parity::A, Parity::B};
}

EstimatorConfig ExperimentConfig::estimator_config() const {
    EstimatorConfig c;
    c.shots = shots;
    c.noise = noise;
    c.mitigation = mitigation;
    c.folds = folds;
    return c;
}

Circuit ExperimentConfig::circuit_for(size_t dimension) const {
    size_t expected = ansatz == AnsatzChoice::OneQubit ? 2 : ansatz == AnsatzChoice::TwoQubit ? 4 : dimension;
    if (expected != dimension) {
        throw ConfigError("ansatz " + ansatz_name(ansatz) + " does not fit a block of dimension " +
                          std::to_string(dimension));
    }
    return as_config_error([&] { return ansatz_for_dimension(dimension); });
}

size_t ExperimentConfig::starts_for(size_t dimension) const {
    return starts > 0 ? static_cast<size_t>(starts) : 10 * dimension;
}

void apply_json(const json &doc, ExperimentConfig &config) {
    try {
        if (doc.contains("model")) {
            const auto &m = doc["model"];
            config.model.n_particles = m.value("n", config.model.n_particles);
            config.model.eps = m.value("eps", config.model.eps);
            config.model.v = m.value("v", config.model.v);
            config.model.w = m.value("w", config.model.w);
        }
        if (doc.contains("block")) {
            if (doc["block"].is_null()) {
                config.block.reset();
            } else {
                config.block = as_config_error([&] { return parse_parity(doc["block"].get<std::string>()); });
            }
        }
        if (doc.contains("ansatz")) {
            config.ansatz = parse_ansatz(doc["ansatz"].get<std::string>());
        }
        if (doc.contains("shots")) {
            const auto &s = doc["shots"];
            config.shots = as_config_error([&] {
                return s.is_string() ? ShotBudget::parse(s.get<std::string>()) : ShotBudget::sampled(s.get<int64_t>());
            });
        }
        if (doc.contains("noise")) {
            const auto &n = doc["noise"];
            config.noise.readout_p01 = n.value("readout_p01", config.noise.readout_p01);
            config.noise.readout_p10 = n.value("readout_p10", config.noise.readout_p10);
            config.noise.cnot_depolarizing = n.value("cnot_depolarizing", config.noise.cnot_depolarizing);
        }
        if (doc.contains("mitigation")) {
            config.mitigation =
                as_config_error([&] { return MitigationFlags::parse(doc["mitigation"].get<std::string>()); });
        }
        config.folds = doc.value("folds", config.folds);
        config.starts = doc.value("starts", config.starts);
        config.steps = doc.value("steps", config.steps);
        config.seed = doc.value("seed", config.seed);
        config.max_evaluations = doc.value("max_evaluations", config.max_evaluations);
        config.fixed_parameters = doc.value("fixed_parameters", config.fixed_parameters);
        config.initial_parameters = doc.value("initial_parameters", config.initial_parameters);
        if (doc.contains("format")) {
            config.format = parse_format(doc["format"].get<std::string>());
        }
        if (doc.contains("out")) {
            config.out = doc["out"].is_null() ? std::nullopt : std::optional(doc["out"].get<std::string>());
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad config file: ") + e.what());
    }
}

json to_json(const ExperimentConfig &config) {
    json shots = config.shots.is_exact() ? json("exact") : json(config.shots.count());
    return {
        {"model", {{"n", config.model.n_particles}, {"eps", config.model.eps}, {"v", config.model.v}, {"w", config.model.w}}},
        {"block", config.block ? json(parity_name(*config.block)) : json(nullptr)},
        {"ansatz", ansatz_name(config.ansatz)},
        {"shots", shots},
        {"noise",
         {{"readout_p01", config.noise.readout_p01},
          {"readout_p10", config.noise.readout_p10},
          {"cnot_depolarizing", config.noise.cnot_depolarizing}}},
        {"mitigation", config.mitigation.str()},
        {"folds", config.folds},
        {"starts", config.starts},
        {"steps", config.steps},
        {"seed", config.seed},
        {"max_evaluations", config.max_evaluations},
        {"fixed_parameters", config.fixed_parameters},
        {"initial_parameters", config.initial_parameters},
        {"format", config.format == OutputFormat::Csv ? "csv" : "json"},
    };
}

CommandOutput cmd_decompose(const ExperimentConfig &config) {
    config.validate();
    auto [a, b] = as_config_error([&] { return build_blocks(config.model); });
    std::ostringstream out;
    for (Parity p : config.blocks()) {
        const QuasispinBlock &block = p == Parity::A ? a : b;
        Eigen::MatrixXd squared = square_block(block);
        PauliSum h = as_config_error([&] { return decompose(block.matrix); });
        PauliSum h2 = decompose(squared);
        out << "# block " << parity_name(p) << " N=" << config.model.n_particles << " eps=" << format_number(config.model.eps)
            << " V=" << format_number(config.model.v) << " W=" << format_number(config.model.w) << '\n';
        out << "# m";
        for (auto m : block.m_values) {
            out << ' ' << format_number(m.value());
        }
        out << "\n# H matrix\n";
        write_matrix(out, block.matrix);
        out << "# H pauli\n";
        write_text(out, h);
        out << "# H^2 matrix\n";
        write_matrix(out, squared);
        out << "# H^2 pauli\n";
        write_text(out, h2);
    }
    CommandOutput result;
    result.console = out.str();
    result.files["decompose.txt"] = result.console;
    return result;
}

CommandOutput cmd_sweep(const ExperimentConfig &config) {
    auto blocks = setup_blocks(config);
    std::vector<double> grid = uniform_grid(config.steps);

    json rows = json::array();
    std::ostringstream csv;
    csv << "block,angle,energy,variance,energy_stderr,variance_stderr\n";
    for (const auto &b : blocks) {
        if (b.circuit.num_parameters() > 1 && config.fixed_parameters.size() != b.circuit.num_parameters()) {
            throw ConfigError("sweeping a multi-parameter ansatz needs fixed_parameters for all " +
                              std::to_string(b.circuit.num_parameters()) + " slots");
        }
        auto points = sweep(b.observables, b.circuit, 0, grid, config.estimator_config(), b.seed,
                            b.circuit.num_parameters() > 1 ? std::span<const double>(config.fixed_parameters)
                                                           : std::span<const double>());
        for (const auto &pt : points) {
            csv << parity_name(b.parity) << ',' << format_number(pt.angle) << ',' << format_number(pt.energy) << ','
                << format_number(pt.variance) << ',' << format_number(pt.energy_stderr) << ','
                << format_number(pt.variance_stderr) << '\n';
            rows.push_back({{"block", parity_name(b.parity)},
                            {"angle", num(pt.angle)},
                            {"energy", num(pt.energy)},
                            {"variance", num(pt.variance)},
                            {"energy_stderr", num(pt.energy_stderr)},
                            {"variance_stderr", num(pt.variance_stderr)}});
        }
    }
    CommandOutput result;
    if (config.format == OutputFormat::Csv) {
        result.console = csv.str();
        result.files["sweep.csv"] = result.console;
    } else {
        json doc = header("sweep", config);
        doc["rows"] = rows;
        result.console = doc.dump(2) + "\n";
        result.files["sweep.json"] = result.console;
    }
    return result;
}

CommandOutput cmd_minimize(const ExperimentConfig &config) {
    auto blocks = setup_blocks(config);
    json doc = header("minimize", config);
    doc["blocks"] = json::array();
    CommandOutput result;
    for (const auto &b : blocks) {
        std::vector<double> initial = config.initial_parameters;
        if (initial.empty()) {
            Rng rng(derive_seed(b.seed, {0x1717}));
            initial.resize(b.circuit.num_parameters());
            for (auto &x : initial) {
                x = -std::numbers::pi + 2.0 * std::numbers::pi * rng.uniform();
            }
        } else if (initial.size() != b.circuit.num_parameters()) {
            throw ConfigError("initial_parameters needs " + std::to_string(b.circuit.num_parameters()) + " values");
        }
        RunTrace trace = minimize_variance(b.observables, b.circuit, initial, config.estimator_config(),
                                           optimizer_options(config), b.seed);
        doc["blocks"].push_back({{"block", parity_name(b.parity)},
                                 {"initial_parameters", nums(initial)},
                                 {"trace", trace_json(trace)}});
        result.files["trace_" + parity_name(b.parity) + ".csv"] = trace_csv(trace);
    }
    result.console = doc.dump(2) + "\n";
    result.files["minimize.json"] = result.console;
    return result;
}

namespace {

CommandOutput spectrum_output(const ExperimentConfig &config, const std::vector<BlockSpectrum> &spectra) {
    CommandOutput result;
    json doc = header("spectrum", config);
    doc["blocks"] = json::array();

    json table = json::array();
    std::ostringstream csv;
    csv << "state,block,exact,measured,stderr,variance,members,reference_hw_energy,reference_hw_stderr,"
           "reference_hw_variance\n";

    bool complete = true;
    for (const auto &s : spectra) {
        const auto &b = *s.setup;
        const auto &report = s.report;
        complete = complete && report.coverage >= 1.0;

        json clusters = json::array();
        for (size_t k = 0; k < report.clusters.size(); ++k) {
            const auto &c = report.clusters[k];
            auto lambda = matched_eigenvalue(report, k);
            std::string label = cluster_label(spectra, report, k);
            clusters.push_back({{"state", label},
                                {"energy", num(c.energy)},
                                {"stderr", num(c.std_error)},
                                {"variance", num(c.variance)},
                                {"residual", num(c.residual)},
                                {"exact", lambda ? num(*lambda) : json(nullptr)},
                                {"members", c.members},
                                {"representative_parameters", nums(c.representative_parameters)}});

            const HardwareReference *ref = lambda ? find_reference(config.model, *lambda) : nullptr;
            csv << label << ',' << parity_name(b.parity) << ',' << (lambda ? format_number(*lambda) : "") << ','
                << format_number(c.energy) << ',' << format_number(c.std_error) << ',' << format_number(c.variance)
                << ',' << c.members.size() << ',';
            if (ref) {
                csv << format_number(ref->energy) << ',' << format_number(ref->uncertainty) << ','
                    << format_number(ref->variance);
            } else {
                csv << ",,";
            }
            csv << '\n';
            json row = {{"state", label},
                        {"block", parity_name(b.parity)},
                        {"exact", lambda ? num(*lambda) : json(nullptr)},
                        {"measured", num(c.energy)},
                        {"stderr", num(c.std_error)},
                        {"variance", num(c.variance)},
                        {"members", c.members.size()}};
            if (ref) {
                row["reference_hw"] = {{"energy", ref->energy}, {"stderr", ref->uncertainty}, {"variance", ref->variance}};
            }
            table.push_back(row);
        }

        json runs = json::array();
        for (size_t r = 0; r < report.runs.size(); ++r) {
            const auto &t = report.runs[r];
            runs.push_back({{"run", r},
                            {"seed", t.seed},
                            {"converged", t.converged},
                            {"stop_reason", t.stop_reason},
                            {"evaluations", t.iterations.size()},
                            {"final_parameters", nums(t.final_parameters)},
                            {"energy", num(t.final.energy)},
                            {"energy_stderr", num(t.final.energy_stderr)},
                            {"variance", num(t.final.variance)},
                            {"variance_stderr", num(t.final.variance_stderr)}});
            char name[64];
            std::snprintf(name, sizeof(name), "traces/trace_%s_%03zu.csv", parity_name(b.parity).c_str(), r);
            result.files[name] = trace_csv(t);
        }

        std::vector<double> m_values;
        for (auto m : b.block.m_values) {
            m_values.push_back(m.value());
        }
        doc["blocks"].push_back({{"block", parity_name(b.parity)},
                                 {"m_values", nums(m_values)},
                                 {"n_starts", report.n_starts},
                                 {"seed", report.seed},
                                 {"oracle_eigenvalues", nums(report.oracle_eigenvalues)},
                                 {"coverage", num(report.coverage)},
                                 {"clusters", clusters},
                                 {"runs", runs}});
    }
    doc["complete"] = complete;
    result.files["spectrum.json"] = doc.dump(2) + "\n";

    if (config.format == OutputFormat::Csv) {
        result.files["spectrum_table.csv"] = csv.str();
        result.console = csv.str();
    } else {
        json t = {{"format_version", kFormatVersion}, {"rows", table}};
        result.files["spectrum_table.json"] = t.dump(2) + "\n";
        result.console = result.files["spectrum_table.json"];
    }
    result.exit_code = complete ? kExitOk : kExitIncomplete;
    return result;
}

}  // namespace

CommandOutput cmd_spectrum(const ExperimentConfig &config) {
    auto blocks = setup_blocks(config);
    auto spectra = run_spectra(blocks, config);
    return spectrum_output(config, spectra);
}

CommandOutput cmd_overlaps(const ExperimentConfig &config) {
    auto blocks = setup_blocks(config);
    auto spectra = run_spectra(blocks, config);
    CommandOutput result = spectrum_output(config, spectra);
    result.console.clear();

    for (const auto &s : spectra) {
        const auto &b = *s.setup;
        Eigen::MatrixXd table = overlap_table(s.report, b.circuit, s.oracle);
        std::string name = "overlaps_" + parity_name(b.parity);
        if (config.format == OutputFormat::Csv) {
            std::ostringstream csv;
            csv << "state";
            for (Eigen::Index j = 0; j < s.oracle.size(); ++j) {
                csv << ',' << format_number(s.oracle.eigenvalues(j));
            }
            csv << '\n';
            for (Eigen::Index i = 0; i < table.rows(); ++i) {
                csv << cluster_label(spectra, s.report, static_cast<size_t>(i));
                for (Eigen::Index j = 0; j < table.cols(); ++j) {
                    csv << ',' << format_number(table(i, j));
                }
                csv << '\n';
            }
            result.files[name + ".csv"] = csv.str();
            result.console += "# block " + parity_name(b.parity) + "\n" + csv.str();
        } else {
            json rows = json::array();
            for (Eigen::Index i = 0; i < table.rows(); ++i) {
                std::vector<double> row(static_cast<size_t>(table.cols()));
                for (Eigen::Index j = 0; j < table.cols(); ++j) {
                    row[static_cast<size_t>(j)] = table(i, j);
                }
                rows.push_back({{"state", cluster_label(spectra, s.report, static_cast<size_t>(i))},
                                {"fidelities", nums(row)}});
            }
            std::vector<double> eig(s.oracle.eigenvalues.data(), s.oracle.eigenvalues.data() + s.oracle.size());
            json doc = {{"format_version", kFormatVersion},
                        {"block", parity_name(b.parity)},
                        {"oracle_eigenvalues", nums(eig)},
                        {"rows", rows}};
            result.files[name + ".json"] = doc.dump(2) + "\n";
            result.console += result.files[name + ".json"];
        }
    }
    return result;
}

void write_files(const CommandOutput &output, const std::string &directory) {
    namespace fs = std::filesystem;
    for (const auto &[name, content] : output.files) {
        fs::path path = fs::path(directory) / name;
        fs::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + path.string());
        }
        f << content;
    }
}

}  // namespace lmgvqe::cli
