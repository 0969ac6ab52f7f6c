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

#ifndef LMGVQE_OPTIMIZER_H
#define LMGVQE_OPTIMIZER_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lmgvqe/analysis.h"
#include "lmgvqe/circuits.h"
#include "lmgvqe/estimator.h"

namespace lmgvqe {

struct OptimizerOptions {
    /// Maximum number of objective evaluations per run.
    int max_evaluations = 600;
    /// Edge length of the initial simplex, radians.
    double initial_step = 0.6;
    /// Simplex diameter below which the simplex counts as collapsed.
    double collapse_size = 1e-9;
    /// Restarts allowed after a collapse without convergence.
    int max_restarts = 8;
    /// Overrides the default stopping threshold when set.
    std::optional<double> convergence_threshold;
};

/// Stopping threshold on |variance|: 1e-8 in exact mode, max(2 * variance_stderr, 0.01) when
/// sampled.
double convergence_threshold(const EstimationResult &result, const OptimizerOptions &options);

struct TraceEntry {
    std::vector<double> parameters;
    double energy = 0.0;
    double energy_stderr = 0.0;
    double variance = 0.0;
    double variance_stderr = 0.0;
    /// Smallest |variance| recorded so far in this run.
    double best_variance = 0.0;
};

struct RunTrace {
    std::vector<TraceEntry> iterations;
    bool converged = false;
    /// Why the run stopped: "converged", "collapsed" or "budget".
    std::string stop_reason;
    std::vector<double> final_parameters;
    EstimationResult final;
    uint64_t seed = 0;
};

/// Derivative-free local minimization of the variance over the circuit parameters.
///
/// Nelder-Mead on the signed variance; each evaluation draws fresh shots. When the simplex
/// collapses without meeting the threshold it is rebuilt around the best point with the
/// initial edge length. Stops on |variance| below the threshold (the triggering evaluation
/// becomes `final`), after `max_restarts` collapses, or when the evaluation budget is spent; an
/// unconverged trace is returned rather than thrown.
RunTrace minimize_variance(const VarianceObservables &observables, const Circuit &circuit,
                           std::span<const double> initial, const EstimatorConfig &config,
                           const OptimizerOptions &options, uint64_t seed);

struct SweepPoint {
    double angle = 0.0;
    double energy = 0.0;
    double variance = 0.0;
    double energy_stderr = 0.0;
    double variance_stderr = 0.0;
};

/// `steps` uniformly spaced angles over [-pi, pi], both ends included.
std::vector<double> uniform_grid(int steps);

/// Evaluates energy and variance with parameter `parameter_index` set to each grid angle.
/// Multi-parameter circuits need `fixed_parameters` holding a value for every slot (the swept
/// slot's value is ignored). Throws std::invalid_argument on an empty grid.
std::vector<SweepPoint> sweep(const VarianceObservables &observables, const Circuit &circuit,
                              size_t parameter_index, std::span<const double> grid, const EstimatorConfig &config,
                              uint64_t seed, std::span<const double> fixed_parameters = {});

struct ZeroCheck {
    bool passed = false;
    double residual = 0.0;
    double energy = 0.0;
};

/// Residual |M psi - <psi|M|psi> psi| of the noiseless ansatz state against the dense matrix
/// of `h`; passes when below `tolerance`.
ZeroCheck accidental_zero_check(const Circuit &circuit, std::span<const double> parameters, const PauliSum &h,
                                double tolerance = 1e-6);

struct SpectrumCluster {
    double energy = 0.0;
    double std_error = 0.0;
    std::vector<size_t> members;
    std::vector<double> representative_parameters;
    /// Variance and residual of the representative member.
    double variance = 0.0;
    double residual = 0.0;
};

struct SpectrumReport {
    /// Ascending energy.
    std::vector<SpectrumCluster> clusters;
    std::vector<RunTrace> runs;
    size_t n_starts = 0;
    /// Oracle eigenvalues of the dense Hamiltonian, ascending.
    std::vector<double> oracle_eigenvalues;
    /// For each oracle eigenvalue, the index of the matching cluster, if any.
    std::vector<std::optional<size_t>> matches;
    /// Fraction of oracle eigenvalues matched by a cluster.
    double coverage = 0.0;
    uint64_t seed = 0;
};

/// Multistart variance minimization from uniform random parameters in [-pi, pi]^k.
///
/// Converged runs whose representative passes the accidental-zero check are clustered by
/// energy with radius max(5 * stderr, 1e-3). The check tolerance is 10 * sqrt(threshold) in
/// exact mode (the residual is the square root of the exact variance) and 10 * energy_stderr
/// when sampled.
SpectrumReport discover_spectrum(const VarianceObservables &observables, const Circuit &circuit, size_t n_starts,
                                 const EstimatorConfig &config, const OptimizerOptions &options,
                                 uint64_t master_seed);

}  // namespace lmgvqe

#endif
