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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "experiment.h"

using namespace lmgvqe::cli;
namespace fs = std::filesystem;

namespace {

int run_binary(const std::string &args) {
    std::string cmd = std::string(LMGVQE_BINARY) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path temp_dir(const std::string &name) {
    auto p = fs::temp_directory_path() / ("lmgvqe_test_" + name);
    fs::remove_all(p);
    return p;
}

size_t count_lines(const std::string &s) {
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, FormatNumber) {
    EXPECT_EQ(format_number(-0.8660254037844386), "-0.866025404");
    EXPECT_EQ(format_number(21.0), "21");
}

TEST(Cli, DecomposeN1) {
    ExperimentConfig c;
    c.model.n_particles = 1;
    auto out = cmd_decompose(c);
    EXPECT_NE(out.console.find("-0.5 I\n"), std::string::npos);
    EXPECT_NE(out.console.find("0.5 I\n"), std::string::npos);
}

TEST(Cli, SweepRowCounts) {
    ExperimentConfig c;
    auto out = cmd_sweep(c);
    EXPECT_EQ(count_lines(out.console), 101u);
    c.steps = 10;
    c.block = lmgvqe::Parity::A;
    EXPECT_EQ(count_lines(cmd_sweep(c).console), 11u);
}

TEST(Cli, ExactSweepHasZeroErrors) {
    ExperimentConfig c;
    c.steps = 5;
    auto csv = cmd_sweep(c).console;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        EXPECT_TRUE(line.ends_with(",0,0")) << line;
    }
}

TEST(Cli, AnsatzMustFitBlock) {
    ExperimentConfig c;
    c.ansatz = AnsatzChoice::TwoQubit;
    EXPECT_THROW(cmd_sweep(c), ConfigError);
    c.ansatz = AnsatzChoice::Auto;
    c.model.n_particles = 7;
    EXPECT_THROW(cmd_sweep(c), ConfigError);  // 2q sweep without fixed parameters
    c.fixed_parameters = {0.0, 0.1, 0.2};
    c.steps = 3;
    EXPECT_NO_THROW(cmd_sweep(c));
}

TEST(Cli, JsonConfigRoundTrip) {
    ExperimentConfig c;
    c.model.n_particles = 7;
    c.block = lmgvqe::Parity::B;
    c.shots = lmgvqe::ShotBudget::sampled(1234);
    c.noise.cnot_depolarizing = 0.01;
    c.mitigation.cnot = true;
    c.folds = {1, 3, 5};
    c.seed = 99;
    ExperimentConfig d;
    apply_json(to_json(c), d);
    EXPECT_EQ(to_json(d), to_json(c));
    EXPECT_THROW(apply_json(nlohmann::json{{"shots", "lots"}}, d), ConfigError);
    EXPECT_THROW(apply_json(nlohmann::json{{"ansatz", "3q"}}, d), ConfigError);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_binary("decompose --n 3"), 0);
    EXPECT_EQ(run_binary("decompose --n 0"), kExitConfig);
    EXPECT_EQ(run_binary("decompose --n 3 --eps -1"), kExitConfig);
    EXPECT_EQ(run_binary("sweep --n 4"), kExitConfig);
    EXPECT_EQ(run_binary("sweep --n 3 --shots exact --noise-readout 0.02"), kExitConfig);
    EXPECT_EQ(run_binary("sweep --n 3 --block C"), kExitConfig);
    EXPECT_EQ(run_binary("spectrum --n 3 --format xml"), kExitConfig);
    EXPECT_EQ(run_binary("spectrum --config /nonexistent.json"), kExitConfig);
    EXPECT_EQ(run_binary("frobnicate"), kExitConfig);
    // A single start cannot cover a two-state block.
    auto dir = temp_dir("incomplete");
    EXPECT_EQ(run_binary("spectrum --n 3 --block A --starts 1 --out " + dir.string()), kExitIncomplete);
    EXPECT_TRUE(fs::exists(dir / "spectrum.json"));
}

TEST(Cli, RerunsAreByteIdentical) {
    auto a = temp_dir("rerun_a");
    auto b = temp_dir("rerun_b");
    std::string args = "spectrum --n 3 --shots 2000 --noise-readout 0.02 --noise-cnot 0.01 --mitigate readout "
                       "--starts 6 --seed 17 --out ";
    ASSERT_EQ(run_binary(args + a.string()), run_binary(args + b.string()));
    size_t files = 0;
    for (const auto &entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        ++files;
        auto rel = fs::relative(entry.path(), a);
        EXPECT_EQ(slurp(entry.path()), slurp(b / rel)) << rel;
    }
    EXPECT_GT(files, 3u);
}

TEST(Cli, ConfigFileAndFlagOverride) {
    auto dir = temp_dir("config");
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "cfg.json");
        f << R"({"model": {"n": 3}, "block": "A", "steps": 4, "format": "csv"})";
    }
    auto out = dir / "out";
    ASSERT_EQ(run_binary("sweep --config " + (dir / "cfg.json").string() + " --steps 6 --out " + out.string()), 0);
    EXPECT_EQ(count_lines(slurp(out / "sweep.csv")), 7u);
}

TEST(Cli, SpectrumArtifacts) {
    ExperimentConfig c;
    c.model.n_particles = 7;
    c.block = lmgvqe::Parity::A;
    c.starts = 40;
    auto out = cmd_overlaps(c);
    EXPECT_EQ(out.exit_code, kExitOk);
    ASSERT_TRUE(out.files.contains("spectrum.json"));
    ASSERT_TRUE(out.files.contains("spectrum_table.csv"));
    ASSERT_TRUE(out.files.contains("overlaps_A.csv"));
    ASSERT_TRUE(out.files.contains("traces/trace_A_000.csv"));
    auto doc = nlohmann::json::parse(out.files.at("spectrum.json"));
    EXPECT_EQ(doc["format_version"], kFormatVersion);
    EXPECT_EQ(doc["blocks"][0]["clusters"].size(), 4u);
    EXPECT_TRUE(out.files.at("overlaps_A.csv").starts_with("state,-6.20809924,-2.94409721,1.20809924,5.94409721\n"));
}
