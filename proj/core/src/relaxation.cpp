// Copyright 2026 The owqc Authors
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

#include "owqc/nmr/relaxation.hpp"

#include <cmath>
#include <stdexcept>

namespace owqc::nmr {

std::array<Matrix, 4> relaxation_kraus(double t1, double t2, double t) {
    if (t < 0.0) throw std::invalid_argument("relaxation: negative time");
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("relaxation: T1 and T2 must be positive");
    if (t2 > 2.0 * t1) throw std::invalid_argument("relaxation: T2 > 2 T1 gives a negative dephasing rate");

    const double gamma = -std::expm1(-t / t1);  // 1 - exp(-t/T1), exact 0 for T1 = inf
    const double dephasing_rate = 1.0 / t2 - 0.5 / t1;
    const double keep = std::exp(-t * dephasing_rate);

    Matrix a0 = Matrix::Zero(2, 2);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - gamma);
    Matrix a1 = Matrix::Zero(2, 2);
    a1(0, 1) = std::sqrt(gamma);

    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p0(1, 1) = keep;
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = std::sqrt(std::max(0.0, 1.0 - keep * keep));

    // Dephasing after damping: K = P_i A_j.
    return {p0 * a0, p0 * a1, p1 * a0, p1 * a1};
}

Matrix relaxation_choi(double t1, double t2, double t) {
    const std::array<Matrix, 4> kraus = relaxation_kraus(t1, t2, t);
    Matrix choi = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Matrix unit = Matrix::Zero(2, 2);
            unit(i, j) = 1.0;
            Matrix image = Matrix::Zero(2, 2);
            for (const Matrix& k : kraus) image += k * unit * k.adjoint();
            choi.block(2 * i, 2 * j, 2, 2) = image;
        }
    }
    return choi;
}

EnsembleState relaxation_channel(const EnsembleState& state, const MoleculeSpec& spec, double t) {
    if (t < 0.0) throw std::invalid_argument("relaxation_channel: negative time");
    if (spec.num_spins() != state.num_qubits()) {
        throw std::invalid_argument("relaxation_channel: spin count does not match the state");
    }
    DensityMatrix rho = state.rho;
    if (t > 0.0) {
        for (int q = 1; q <= state.num_qubits(); ++q) {
            const std::array<Matrix, 4> kraus = relaxation_kraus(spec.t1(q), spec.t2(q), t);
            rho = apply_channel(rho, kraus, {q});
        }
    }
    return {std::move(rho), state.elapsed_s + t};
}

}  // namespace owqc::nmr
