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

#include "lmgvqe/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lmgvqe/rng.h"

namespace lmgvqe {

double convergence_threshold(const EstimationResult &result, const OptimizerOptions &options) {
    if (options.convergence_threshold) {
        return *options.convergence_threshold;
    }
    if (result.shots.is_exact()) {
        return 1e-8;
    }
    return std::max(2.0 * result.variance_stderr, 0.01);
}

namespace {

using Point = std::vector<double>;

struct Vertex {
    Point x;
    double f = 0.0;
};

// Wraps the estimator: records every evaluation and latches on convergence or budget.
class Objective {
   public:
    Objective(const VarianceObservables &observables, const Circuit &circuit, const EstimatorConfig &config,
              const OptimizerOptions &options, uint64_t seed, RunTrace &trace)
        : observables_(observables), circuit_(circuit), config_(config), options_(options), seed_(seed),
          trace_(trace) {
    }

    double operator()(const Point &x) {
        if (done()) {
            return std::numeric_limits<double>::infinity();
        }
        auto index = static_cast<uint64_t>(trace_.iterations.size());
        EstimationResult r = estimate(circuit_, x, observables_, config_, derive_seed(seed_, {index}));

        double best = trace_.iterations.empty() ? std::abs(r.variance)
                                                : std::min(trace_.iterations.back().best_variance, std::abs(r.variance));
        trace_.iterations.push_back({x, r.energy, r.energy_stderr, r.variance, r.variance_stderr, best});

        if (std::abs(r.variance) < convergence_threshold(r, options_)) {
            trace_.converged = true;
            trace_.stop_reason = "converged";
            trace_.final_parameters = x;
            trace_.final = r;
        } else if (std::abs(r.variance) <= best_abs_) {
            best_abs_ = std::abs(r.variance);
            best_x_ = x;
            best_result_ = r;
        }
        return r.variance;
    }

    bool done() const {
        return trace_.converged || budget_spent();
    }
    bool budget_spent() const {
        return static_cast<int>(trace_.iterations.size()) >= options_.max_evaluations;
    }

    void finish(const std::string &reason) {
        if (trace_.converged) {
            return;
        }
        trace_.stop_reason = reason;
        trace_.final_parameters = best_x_;
        trace_.final = best_result_;
    }

   private:
    const VarianceObservables &observables_;
    const Circuit &circuit_;
    const EstimatorConfig &config_;
    const OptimizerOptions &options_;
    uint64_t seed_;
    RunTrace &trace_;
    double best_abs_ = std::numeric_limits<double>::infinity();
    Point best_x_;
    EstimationResult best_result_;
};

Point affine(const Point &a, const Point &b, double t) {
    // a + t (b - a)
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + t * (b[i] - a[i]);
    }
    return out;
}

double diameter(const std::vector<Vertex> &simplex) {
    double d = 0.0;
    for (size_t k = 1; k < simplex.size(); ++k) {
        double s = 0.0;
        for (size_t i = 0; i < simplex[0].x.size(); ++i) {
            double diff = simplex[k].x[i] - simplex[0].x[i];
            s += diff * diff;
        }
        d = std::max(d, std::sqrt(s));
    }
    return d;
}

// One Nelder-Mead descent from `start`. Returns the best vertex; stops early when the
// objective latches.
Vertex nelder_mead(Objective &objective, const Point &start, double step, double collapse_size) {
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    const size_t n = start.size();
    std::vector<Vertex> simplex;
    simplex.push_back({start, objective(start)});
    for (size_t i = 0; i < n && !objective.done(); ++i) {
        Point x = start;
        x[i] += step;
        simplex.push_back({x, objective(x)});
    }
    auto by_value = [](const Vertex &a, const Vertex &b) { return a.f < b.f; };

    while (!objective.done()) {
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        if (diameter(simplex) < collapse_size) {
            break;
        }
        Point centroid(n, 0.0);
        for (size_t k = 0; k < n; ++k) {
            for (size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[k].x[i] / static_cast<double>(n);
            }
        }
        Vertex &worst = simplex[n];
        Point xr = affine(centroid, worst.x, -kReflect);
        double fr = objective(xr);
        if (fr < simplex[0].f) {
            Point xe = affine(centroid, worst.x, -kExpand);
            double fe = objective(xe);
            worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[n - 1].f) {
            worst = {xr, fr};
        } else {
            bool outside = fr < worst.f;
            Point xc = outside ? affine(centroid, xr, kContract) : affine(centroid, worst.x, kContract);
            double fc = objective(xc);
            if (fc < (outside ? fr : worst.f)) {
                worst = {xc, fc};
            } else {
                for (size_t k = 1; k <= n && !objective.done(); ++k) {
                    simplex[k].x = affine(simplex[0].x, simplex[k].x, kShrink);
                    simplex[k].f = objective(simplex[k].x);
                }
            }
        }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    return simplex[0];
}

}  // namespace

RunTrace minimize_variance(const VarianceObservables &observables, const Circuit &circuit,
                           std::span<const double> initial, const EstimatorConfig &config,
                           const OptimizerOptions &options, uint64_t seed) {
    if (options.max_evaluations < 1) {
        throw std::invalid_argument("evaluation budget must be >= 1");
    }
    if (initial.size() != circuit.num_parameters()) {
        throw std::invalid_argument("initial point has " + std::to_string(initial.size()) + " entries, circuit takes " +
                                    std::to_string(circuit.num_parameters()));
    }
    config.validate();

    RunTrace trace;
    trace.seed = seed;
    Objective objective(observables, circuit, config, options, seed, trace);

    Point start(initial.begin(), initial.end());
    if (start.empty()) {
        objective(start);
        objective.finish(objective.budget_spent() ? "budget" : "collapsed");
        return trace;
    }
    for (int restart = 0; !objective.done(); ++restart) {
        if (restart > options.max_restarts) {
            objective.finish("collapsed");
            return trace;
        }
        Vertex best = nelder_mead(objective, start, options.initial_step, options.collapse_size);
        start = best.x;
    }
    objective.finish("budget");
    return trace;
}

std::vector<double> uniform_grid(int steps) {
    if (steps < 1) {
        throw std::invalid_argument("grid needs at least one step");
    }
    std::vector<double> grid(static_cast<size_t>(steps));
    if (steps == 1) {
        grid[0] = 0.0;
        return grid;
    }
    for (int k = 0; k < steps; ++k) {
        grid[static_cast<size_t>(k)] = -std::numbers::pi + 2.0 * std::numbers::pi * k / (steps - 1);
    }
    return grid;
}

std::vector<SweepPoint> sweep(const VarianceObservables &observables, const Circuit &circuit,
                              size_t parameter_index, std::span<const double> grid, const EstimatorConfig &config,
                              uint64_t seed, std::span<const double> fixed_parameters) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    if (parameter_index >= circuit.num_parameters()) {
        throw std::invalid_argument("swept parameter index out of range");
    }
    Point params(circuit.num_parameters(), 0.0);
    if (circuit.num_parameters() > 1) {
        if (fixed_parameters.size() != circuit.num_parameters()) {
            throw std::invalid_argument("multi-parameter sweeps need a value for every parameter slot");
        }
        params.assign(fixed_parameters.begin(), fixed_parameters.end());
    }

    std::vector<double> angles(grid.begin(), grid.end());
    std::stable_sort(angles.begin(), angles.end());
    std::vector<SweepPoint> out;
    out.reserve(angles.size());
    for (size_t k = 0; k < angles.size(); ++k) {
        params[parameter_index] = angles[k];
        auto r = estimate(circuit, params, observables, config, derive_seed(seed, {k}));
        out.push_back({angles[k], r.energy, r.variance, r.energy_stderr, r.variance_stderr});
    }
    return out;
}

ZeroCheck accidental_zero_check(const Circuit &circuit, std::span<const double> parameters, const PauliSum &h,
                                double tolerance) {
    Eigen::MatrixXcd m = reconstruct(h);
    Statevector state = run(circuit, parameters);
    const Eigen::VectorXcd &psi = state.amplitudes();
    Eigen::VectorXcd m_psi = m * psi;
    double energy = psi.dot(m_psi).real();
    double residual = (m_psi - energy * psi).norm();
    return {residual < tolerance, residual, energy};
}

SpectrumReport discover_spectrum(const VarianceObservables &observables, const Circuit &circuit, size_t n_starts,
                                 const EstimatorConfig &config, const OptimizerOptions &options,
                                 uint64_t master_seed) {
    if (n_starts < 1) {
        throw std::invalid_argument("n_starts must be >= 1");
    }
    SpectrumReport report;
    report.n_starts = n_starts;
    report.seed = master_seed;

    EigenDecomposition oracle = eigensolve(reconstruct_real(observables.h));
    report.oracle_eigenvalues.assign(oracle.eigenvalues.data(), oracle.eigenvalues.data() + oracle.size());

    struct Candidate {
        size_t run;
        double energy;
        double std_error;
        double variance;
        double residual;
    };
    std::vector<Candidate> candidates;

    for (size_t r = 0; r < n_starts; ++r) {
        Rng rng(derive_seed(master_seed, {r, 0x1717}));
        Point start(circuit.num_parameters());
        for (auto &x : start) {
            x = -std::numbers::pi + 2.0 * std::numbers::pi * rng.uniform();
        }
        RunTrace trace = minimize_variance(observables, circuit, start, config, options, derive_seed(master_seed, {r}));
        if (trace.converged) {
            double tolerance = config.shots.is_exact()
                                   ? 10.0 * std::sqrt(convergence_threshold(trace.final, options))
                                   : 10.0 * trace.final.energy_stderr;
            ZeroCheck check = accidental_zero_check(circuit, trace.final_parameters, observables.h, tolerance);
            if (check.passed) {
                candidates.push_back(
                    {r, trace.final.energy, trace.final.energy_stderr, trace.final.variance, check.residual});
            }
        }
        report.runs.push_back(std::move(trace));
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate &a, const Candidate &b) { return a.energy < b.energy; });

    auto radius_of = [](double std_error) { return std::max(5.0 * std_error, 1e-3); };
    std::vector<std::vector<Candidate>> groups;
    for (const auto &c : candidates) {
        if (!groups.empty()) {
            auto &g = groups.back();
            double center = 0.0;
            double worst_se = c.std_error;
            for (const auto &m : g) {
                center += m.energy / static_cast<double>(g.size());
                worst_se = std::max(worst_se, m.std_error);
            }
            if (std::abs(c.energy - center) <= radius_of(worst_se)) {
                g.push_back(c);
                continue;
            }
        }
        groups.push_back({c});
    }

    for (const auto &g : groups) {
        SpectrumCluster cluster;
        double se2 = 0.0;
        const Candidate *rep = &g.front();
        for (const auto &m : g) {
            cluster.energy += m.energy / static_cast<double>(g.size());
            se2 += m.std_error * m.std_error;
            cluster.members.push_back(m.run);
            if (std::abs(m.variance) < std::abs(rep->variance)) {
                rep = &m;
            }
        }
        cluster.std_error = std::sqrt(se2) / static_cast<double>(g.size());
        cluster.representative_parameters = report.runs[rep->run].final_parameters;
        cluster.variance = rep->variance;
        cluster.residual = rep->residual;
        std::sort(cluster.members.begin(), cluster.members.end());
        report.clusters.push_back(std::move(cluster));
    }

    size_t matched = 0;
    for (double lambda : report.oracle_eigenvalues) {
        std::optional<size_t> best;
        double best_gap = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < report.clusters.size(); ++k) {
            double gap = std::abs(report.clusters[k].energy - lambda);
            if (gap < best_gap) {
                best_gap = gap;
                best = k;
            }
        }
        if (best && best_gap <= radius_of(report.clusters[*best].std_error)) {
            report.matches.push_back(best);
            ++matched;
        } else {
            report.matches.push_back(std::nullopt);
        }
    }
    report.coverage = report.oracle_eigenvalues.empty()
                          ? 0.0
                          : static_cast<double>(matched) / static_cast<double>(report.oracle_eigenvalues.size());
    return report;
}

}  // namespace lmgvqe
