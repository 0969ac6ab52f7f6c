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

#include "lmgvqe/quasispin.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lmgvqe {

void ModelParams::validate() const {
    if (n_particles < 1) {
        throw std::invalid_argument("n_particles must be >= 1, got " + std::to_string(n_particles));
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    if (!std::isfinite(v) || !std::isfinite(w)) {
        throw std::invalid_argument("interaction strengths must be finite");
    }
}

std::string parity_name(Parity p) {
    return p == Parity::A ? "A" : "B";
}

Parity parse_parity(const std::string &text) {
    if (text == "A" || text == "a") {
        return Parity::A;
    }
    if (text == "B" || text == "b") {
        return Parity::B;
    }
    throw std::invalid_argument("block must be A or B, got '" + text + "'");
}

double ladder_squared_element(HalfInteger j, HalfInteger m) {
    if (j.twice < 0 || std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0) {
        throw std::domain_error("m is not a valid projection for this j");
    }
    if (m.twice + 4 > j.twice) {
        throw std::domain_error("(J+)^2 takes m past the top of the multiplet");
    }
    // Work in twice-units: (j-m) = (tj - tm)/2 etc.
    double tj = j.twice;
    double tm = m.twice;
    double a = (tj - tm) * (tj + tm + 2) / 4.0;
    double b = (tj - tm - 2) * (tj + tm + 4) / 4.0;
    return std::sqrt(a) * std::sqrt(b);
}

namespace {

QuasispinBlock make_block(const ModelParams &params, Parity parity) {
    HalfInteger j = HalfInteger::from_twice(params.n_particles);
    QuasispinBlock block;
    block.j = j;
    block.parity = parity;
    int start = parity == Parity::A ? -j.twice : -j.twice + 2;
    for (int tm = start; tm <= j.twice; tm += 4) {
        block.m_values.push_back(HalfInteger::from_twice(tm));
    }

    size_t d = block.m_values.size();
    double jj = j.value() * (j.value() + 1.0);
    block.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t i = 0; i < d; ++i) {
        double m = block.m_values[i].value();
        auto k = static_cast<Eigen::Index>(i);
        block.matrix(k, k) = params.eps * m + params.w * (jj - m * m);
        if (i + 1 < d) {
            double off = -0.5 * params.v * ladder_squared_element(j, block.m_values[i]);
            block.matrix(k, k + 1) = off;
            block.matrix(k + 1, k) = off;
        }
    }
    return block;
}

}  // namespace

std::pair<QuasispinBlock, QuasispinBlock> build_blocks(const ModelParams &params) {
    params.validate();
    return {make_block(params, Parity::A), make_block(params, Parity::B)};
}

QuasispinBlock build_block(const ModelParams &params, Parity parity) {
    params.validate();
    return make_block(params, parity);
}

Eigen::MatrixXd square_block(const QuasispinBlock &block) {
    return block.matrix * block.matrix;
}

}  // namespace lmgvqe
