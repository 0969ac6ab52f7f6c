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

#ifndef LMGVQE_ANALYSIS_H
#define LMGVQE_ANALYSIS_H

#include <Eigen/Dense>
#include <vector>

#include "lmgvqe/circuits.h"

namespace lmgvqe {

struct SpectrumReport;

/// Eigenvalues ascending; column i of `eigenvectors` pairs with eigenvalue i and has its first
/// non-negligible component positive.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    Eigen::Index size() const {
        return eigenvalues.size();
    }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// 1e-14 * max(1, |M|_F). Throws std::invalid_argument if the input is not square or not
/// symmetric within 1e-10.
EigenDecomposition eigensolve(const Eigen::MatrixXd &matrix);

/// |<psi|phi>|^2. Throws std::invalid_argument on a dimension mismatch or when either input is
/// not normalized within 1e-9.
double fidelity(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &phi);
double fidelity(const Statevector &psi, const Eigen::VectorXd &phi);
double fidelity(const Eigen::VectorXd &psi, const Eigen::VectorXd &phi);

/// Fidelity of each reported cluster's representative state (rows, ascending energy) with
/// each oracle eigenvector (columns, ascending eigenvalue).
Eigen::MatrixXd overlap_table(const SpectrumReport &report, const Circuit &circuit,
                              const EigenDecomposition &decomposition);

}  // namespace lmgvqe

#endif
