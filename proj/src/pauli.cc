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

#include "lmgvqe/pauli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lmgvqe {

using cdouble = std::complex<double>;

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

namespace {

Pauli parse_pauli_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

double magnitude(double c) {
    return std::abs(c);
}
double magnitude(const cdouble &c) {
    return std::abs(c);
}

bool is_power_of_two(Eigen::Index n) {
    return n > 0 && (n & (n - 1)) == 0;
}

size_t log2_exact(Eigen::Index n) {
    size_t m = 0;
    while ((Eigen::Index{1} << m) < n) {
        ++m;
    }
    return m;
}

}  // namespace

PauliString PauliString::from_text(std::string_view text, size_t num_qubits) {
    PauliString result(num_qubits);
    if (text == "I") {
        return result;
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    size_t k = 0;
    while (k < text.size()) {
        Pauli p = parse_pauli_char(text[k]);
        ++k;
        size_t start = k;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') {
            ++k;
        }
        if (start == k) {
            throw std::invalid_argument("Pauli label without qubit index in '" + std::string(text) + "'");
        }
        size_t q = std::stoul(std::string(text.substr(start, k - start)));
        if (q >= num_qubits) {
            throw std::invalid_argument("qubit index out of range in '" + std::string(text) + "'");
        }
        if (result.labels_[q] != Pauli::I) {
            throw std::invalid_argument("repeated qubit index in '" + std::string(text) + "'");
        }
        result.labels_[q] = p;
    }
    return result;
}

PauliString PauliString::from_index(uint64_t index, size_t num_qubits) {
    PauliString result(num_qubits);
    for (size_t k = 0; k < num_qubits; ++k) {
        result.labels_[num_qubits - 1 - k] = static_cast<Pauli>(index & 3);
        index >>= 2;
    }
    return result;
}

bool PauliString::is_identity() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Pauli p) { return p == Pauli::I; });
}

uint64_t PauliString::flip_mask() const {
    uint64_t mask = 0;
    auto n = static_cast<unsigned>(labels_.size());
    for (unsigned q = 0; q < n; ++q) {
        if (labels_[q] == Pauli::X || labels_[q] == Pauli::Y) {
            mask |= uint64_t{1} << qubit_bit(q, n);
        }
    }
    return mask;
}

uint64_t PauliString::support_mask() const {
    uint64_t mask = 0;
    auto n = static_cast<unsigned>(labels_.size());
    for (unsigned q = 0; q < n; ++q) {
        if (labels_[q] != Pauli::I) {
            mask |= uint64_t{1} << qubit_bit(q, n);
        }
    }
    return mask;
}

cdouble PauliString::element(uint64_t row, uint64_t col) const {
    if ((row ^ col) != flip_mask()) {
        return 0.0;
    }
    cdouble value = 1.0;
    auto n = static_cast<unsigned>(labels_.size());
    for (unsigned q = 0; q < n; ++q) {
        unsigned bit = qubit_bit(q, n);
        int r = static_cast<int>((row >> bit) & 1);
        switch (labels_[q]) {
            case Pauli::I:
            case Pauli::X:
                break;
            case Pauli::Y:
                // <0|Y|1> = -i, <1|Y|0> = +i.
                value *= r == 0 ? cdouble(0, -1) : cdouble(0, 1);
                break;
            case Pauli::Z:
                if (r == 1) {
                    value = -value;
                }
                break;
        }
    }
    return value;
}

Eigen::MatrixXcd PauliString::to_matrix() const {
    auto dim = Eigen::Index{1} << labels_.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    uint64_t flip = flip_mask();
    for (Eigen::Index r = 0; r < dim; ++r) {
        auto c = static_cast<Eigen::Index>(static_cast<uint64_t>(r) ^ flip);
        m(r, c) = element(static_cast<uint64_t>(r), static_cast<uint64_t>(c));
    }
    return m;
}

std::string PauliString::str() const {
    std::string out;
    for (size_t q = 0; q < labels_.size(); ++q) {
        if (labels_[q] != Pauli::I) {
            out += pauli_char(labels_[q]);
            out += std::to_string(q);
        }
    }
    return out.empty() ? "I" : out;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli strings act on different qubit counts");
    }
    // Single-qubit table: product[x][y] = (phase exponent of i, result label).
    static constexpr int kPhase[4][4] = {
        {0, 0, 0, 0},
        {0, 0, 1, 3},
        {0, 3, 0, 1},
        {0, 1, 3, 0},
    };
    PauliString out(a.num_qubits());
    int power = 0;
    for (size_t q = 0; q < a.num_qubits(); ++q) {
        int x = static_cast<int>(a[q]);
        int y = static_cast<int>(b[q]);
        power += kPhase[x][y];
        out[q] = static_cast<Pauli>(x ^ y);
    }
    static const cdouble kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {kPowers[power % 4], std::move(out)};
}

template <typename Coeff>
void BasicPauliSum<Coeff>::add(const PauliString &string, Coeff coeff) {
    if (terms_.empty() && num_qubits_ == 0) {
        num_qubits_ = string.num_qubits();
    }
    if (string.num_qubits() != num_qubits_) {
        throw std::invalid_argument("term qubit count does not match the sum");
    }
    auto it = terms_.find(string);
    if (it == terms_.end()) {
        if (magnitude(coeff) >= kPruneThreshold) {
            terms_.emplace(string, coeff);
        }
        return;
    }
    it->second += coeff;
    if (magnitude(it->second) < kPruneThreshold) {
        terms_.erase(it);
    }
}

template <typename Coeff>
Coeff BasicPauliSum<Coeff>::coefficient(const PauliString &string) const {
    auto it = terms_.find(string);
    return it == terms_.end() ? Coeff{} : it->second;
}

template class BasicPauliSum<double>;
template class BasicPauliSum<cdouble>;

PauliSum decompose(const Eigen::MatrixXcd &matrix, double hermitian_tolerance) {
    if (matrix.rows() != matrix.cols() || !is_power_of_two(matrix.rows())) {
        throw std::invalid_argument("matrix dimension must be a power of two, got " + std::to_string(matrix.rows()) +
                                    "x" + std::to_string(matrix.cols()));
    }
    double skew = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (skew > hermitian_tolerance) {
        throw std::invalid_argument("matrix is not Hermitian (max |M - M^H| entry " + std::to_string(skew) + ")");
    }

    size_t m = log2_exact(matrix.rows());
    auto dim = static_cast<uint64_t>(matrix.rows());
    PauliSum result(m);
    uint64_t count = uint64_t{1} << (2 * m);
    for (uint64_t index = 0; index < count; ++index) {
        PauliString p = PauliString::from_index(index, m);
        uint64_t flip = p.flip_mask();
        // tr(P M) = sum_b <b|P|b^flip> <b^flip|M|b>.
        cdouble trace = 0.0;
        for (uint64_t b = 0; b < dim; ++b) {
            trace += p.element(b, b ^ flip) *
                     matrix(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b));
        }
        result.add(p, trace.real() / static_cast<double>(dim));
    }
    return result;
}

PauliSum decompose(const Eigen::MatrixXd &matrix, double hermitian_tolerance) {
    return decompose(Eigen::MatrixXcd(matrix.cast<cdouble>()), hermitian_tolerance);
}

namespace {

template <typename Coeff>
Eigen::MatrixXcd reconstruct_impl(const BasicPauliSum<Coeff> &sum) {
    auto dim = Eigen::Index{1} << sum.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[p, coeff] : sum.terms()) {
        uint64_t flip = p.flip_mask();
        for (Eigen::Index r = 0; r < dim; ++r) {
            auto c = static_cast<uint64_t>(r) ^ flip;
            m(r, static_cast<Eigen::Index>(c)) += cdouble(coeff) * p.element(static_cast<uint64_t>(r), c);
        }
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd reconstruct(const PauliSum &sum) {
    return reconstruct_impl(sum);
}

Eigen::MatrixXcd reconstruct(const ComplexPauliSum &sum) {
    return reconstruct_impl(sum);
}

Eigen::MatrixXd reconstruct_real(const PauliSum &sum) {
    return reconstruct_impl(sum).real();
}

ComplexPauliSum multiply(const ComplexPauliSum &a, const ComplexPauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("cannot multiply Pauli sums on " + std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
    ComplexPauliSum out(a.num_qubits());
    for (const auto &[pa, ca] : a.terms()) {
        for (const auto &[pb, cb] : b.terms()) {
            auto prod = multiply(pa, pb);
            out.add(prod.string, ca * cb * prod.phase);
        }
    }
    return out;
}

ComplexPauliSum to_complex(const PauliSum &sum) {
    ComplexPauliSum out(sum.num_qubits());
    for (const auto &[p, c] : sum.terms()) {
        out.add(p, c);
    }
    return out;
}

ComplexPauliSum multiply(const PauliSum &a, const PauliSum &b) {
    return multiply(to_complex(a), to_complex(b));
}

PauliSum to_hermitian(const ComplexPauliSum &sum, double tolerance) {
    PauliSum out(sum.num_qubits());
    for (const auto &[p, c] : sum.terms()) {
        if (std::abs(c.imag()) > tolerance) {
            throw std::logic_error("coefficient of " + p.str() + " has imaginary part " + std::to_string(c.imag()));
        }
        out.add(p, c.real());
    }
    return out;
}

PauliSum square(const PauliSum &h) {
    return to_hermitian(multiply(h, h));
}

double max_coefficient_difference(const PauliSum &a, const PauliSum &b) {
    double worst = 0.0;
    for (const auto &[p, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coefficient(p)));
    }
    for (const auto &[p, c] : b.terms()) {
        worst = std::max(worst, std::abs(c - a.coefficient(p)));
    }
    return worst;
}

void write_text(std::ostream &out, const PauliSum &sum) {
    char buf[64];
    for (const auto &[p, c] : sum.terms()) {
        std::snprintf(buf, sizeof(buf), "%.9g", c);
        out << buf << ' ' << p.str() << '\n';
    }
}

std::string to_text(const PauliSum &sum) {
    std::ostringstream out;
    write_text(out, sum);
    return out.str();
}

PauliSum parse_text(std::string_view text, size_t num_qubits) {
    PauliSum out(num_qubits);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double coeff;
        std::string label;
        if (!(fields >> coeff >> label)) {
            throw std::invalid_argument("malformed Pauli term line: '" + line + "'");
        }
        out.add(PauliString::from_text(label, num_qubits), coeff);
    }
    return out;
}

}  // namespace lmgvqe
