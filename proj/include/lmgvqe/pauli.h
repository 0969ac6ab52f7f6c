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

#ifndef LMGVQE_PAULI_H
#define LMGVQE_PAULI_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lmgvqe {

/*
 * Qubit ordering convention used throughout the library:
 *
 *     qubit 0 is the MOST significant bit of a basis-state index.
 *
 * A string P0 P1 ... P(m-1) therefore acts as the Kronecker product P0 (x) P1 (x) ... (x) P(m-1),
 * and a measured bitstring is written with qubit 0 first. Under this ordering the Pauli
 * decomposition of the LMG N=7 block carries Z0 = -2, Z1 = -1, X1 = -2.8225, Z0X1 = +0.5315.
 */

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Bit position of `qubit` inside a basis-state index of an n-qubit register.
inline unsigned qubit_bit(unsigned qubit, unsigned num_qubits) {
    return num_qubits - 1 - qubit;
}

class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits) : labels_(num_qubits, Pauli::I) {
    }
    explicit PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {
    }

    /// Parses the subscripted form ("Z0X1", "I", "Y0Y1") for a register of `num_qubits`.
    static PauliString from_text(std::string_view text, size_t num_qubits);

    /// Pauli string with index `index` in base 4, qubit 0 being the most significant digit.
    static PauliString from_index(uint64_t index, size_t num_qubits);

    size_t num_qubits() const {
        return labels_.size();
    }
    Pauli operator[](size_t q) const {
        return labels_[q];
    }
    Pauli &operator[](size_t q) {
        return labels_[q];
    }
    const std::vector<Pauli> &labels() const {
        return labels_;
    }
    bool is_identity() const;

    /// Bits flipped by the string (X or Y positions) as a basis-index mask.
    uint64_t flip_mask() const;
    /// Positions contributing a parity sign on measurement (any non-identity label) as a mask.
    uint64_t support_mask() const;

    /// <row| P |col>. Zero unless col == row ^ flip_mask().
    std::complex<double> element(uint64_t row, uint64_t col) const;

    Eigen::MatrixXcd to_matrix() const;

    /// Subscripted text form, e.g. "Z0X1"; the all-identity string prints as "I".
    std::string str() const;

    bool operator==(const PauliString &) const = default;
    auto operator<=>(const PauliString &) const = default;

   private:
    std::vector<Pauli> labels_;
};

std::ostream &operator<<(std::ostream &out, const PauliString &p);

/// Product of two strings: a * b = phase * c.
struct PauliProduct {
    std::complex<double> phase;
    PauliString string;
};
PauliProduct multiply(const PauliString &a, const PauliString &b);

constexpr double kPruneThreshold = 1e-12;

/// Weighted sum of Pauli strings. Terms are kept in lexicographic label order (I < X < Y < Z,
/// qubit 0 most significant), duplicates are merged and coefficients below the prune threshold
/// are dropped.
template <typename Coeff>
class BasicPauliSum {
   public:
    using Terms = std::map<PauliString, Coeff>;

    BasicPauliSum() = default;
    explicit BasicPauliSum(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    const Terms &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Adds `coeff` to the coefficient of `string`, pruning if the result is negligible.
    void add(const PauliString &string, Coeff coeff);

    /// Coefficient of `string`, zero if absent.
    Coeff coefficient(const PauliString &string) const;
    Coeff coefficient(std::string_view text) const {
        return coefficient(PauliString::from_text(text, num_qubits_));
    }

    bool operator==(const BasicPauliSum &) const = default;

   private:
    size_t num_qubits_ = 0;
    Terms terms_;
};

using PauliSum = BasicPauliSum<double>;
using ComplexPauliSum = BasicPauliSum<std::complex<double>>;

extern template class BasicPauliSum<double>;
extern template class BasicPauliSum<std::complex<double>>;

/// Expands a Hermitian 2^m x 2^m matrix as sum_i beta_i P_i with beta_i = tr(P_i M) / 2^m.
///
/// Throws std::invalid_argument if the dimension is not a power of two or if the matrix
/// deviates from Hermitian by more than `hermitian_tolerance` in any entry.
PauliSum decompose(const Eigen::MatrixXcd &matrix, double hermitian_tolerance = 1e-10);
PauliSum decompose(const Eigen::MatrixXd &matrix, double hermitian_tolerance = 1e-10);

Eigen::MatrixXcd reconstruct(const PauliSum &sum);
Eigen::MatrixXcd reconstruct(const ComplexPauliSum &sum);

/// Real part of reconstruct(sum); exact for sums without Y-odd terms (such as real symmetric
/// Hamiltonians) and the Hermitian part otherwise.
Eigen::MatrixXd reconstruct_real(const PauliSum &sum);

/// Symbolic product using the single-qubit rules (XY = iZ, ...). Throws std::invalid_argument
/// on mismatched qubit counts.
ComplexPauliSum multiply(const ComplexPauliSum &a, const ComplexPauliSum &b);
ComplexPauliSum multiply(const PauliSum &a, const PauliSum &b);

ComplexPauliSum to_complex(const PauliSum &sum);

/// Drops imaginary parts after checking they are all below `tolerance`; throws std::logic_error
/// otherwise (the operator was not Hermitian).
PauliSum to_hermitian(const ComplexPauliSum &sum, double tolerance = 1e-10);

/// h * h as a real Pauli sum.
PauliSum square(const PauliSum &h);

/// Largest coefficient difference over the union of both term sets.
double max_coefficient_difference(const PauliSum &a, const PauliSum &b);

/// One term per line, "<coeff> <string>", coefficients at 9 significant digits.
std::string to_text(const PauliSum &sum);
void write_text(std::ostream &out, const PauliSum &sum);

/// Inverse of to_text. Blank lines and lines starting with '#' are ignored.
PauliSum parse_text(std::string_view text, size_t num_qubits);

}  // namespace lmgvqe

#endif
