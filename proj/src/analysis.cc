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

#include "lmgvqe/analysis.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lmgvqe/optimizer.h"

namespace lmgvqe {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd &a) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition eigensolve(const Eigen::MatrixXd &matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw std::invalid_argument("eigensolve needs a non-empty square matrix");
    }
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("eigensolve needs a symmetric matrix");
    }
    const Eigen::Index n = matrix.rows();
    Eigen::MatrixXd a = 0.5 * (matrix + matrix.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double target = 1e-14 * std::max(1.0, matrix.norm());

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= target; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a(r, p);
                        double arq = a(r, q);
                        a(r, p) = a(p, r) = c * arp - s * arq;
                        a(r, q) = a(q, r) = s * arp + c * arq;
                    }
                    double vrp = v(r, p);
                    double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index src = order[static_cast<size_t>(k)];
        out.eigenvalues(k) = a(src, src);
        Eigen::VectorXd col = v.col(src);
        double scale = col.cwiseAbs().maxCoeff();
        for (Eigen::Index r = 0; r < n; ++r) {
            if (std::abs(col(r)) > 1e-10 * scale) {
                if (col(r) < 0) {
                    col = -col;
                }
                break;
            }
        }
        out.eigenvectors.col(k) = col;
    }
    return out;
}

double fidelity(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &phi) {
    if (psi.size() != phi.size()) {
        throw std::invalid_argument("fidelity of states with different dimensions");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-9 || std::abs(phi.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("fidelity needs normalized states");
    }
    return std::norm(psi.dot(phi));
}

double fidelity(const Statevector &psi, const Eigen::VectorXd &phi) {
    return fidelity(psi.amplitudes(), Eigen::VectorXcd(phi.cast<std::complex<double>>()));
}

double fidelity(const Eigen::VectorXd &psi, const Eigen::VectorXd &phi) {
    return fidelity(Eigen::VectorXcd(psi.cast<std::complex<double>>()),
                    Eigen::VectorXcd(phi.cast<std::complex<double>>()));
}

Eigen::MatrixXd overlap_table(const SpectrumReport &report, const Circuit &circuit,
                              const EigenDecomposition &decomposition) {
    auto rows = static_cast<Eigen::Index>(report.clusters.size());
    Eigen::MatrixXd table(rows, decomposition.size());
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto &cluster = report.clusters[static_cast<size_t>(i)];
        Statevector state = run(circuit, cluster.representative_parameters);
        if (state.dimension() != decomposition.size()) {
            throw std::invalid_argument("ansatz dimension does not match the oracle decomposition");
        }
        for (Eigen::Index j = 0; j < decomposition.size(); ++j) {
            table(i, j) = fidelity(state, Eigen::VectorXd(decomposition.eigenvectors.col(j)));
        }
    }
    return table;
}

}  // namespace lmgvqe
