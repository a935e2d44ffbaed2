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

#include "owqc/random.hpp"

#include <cmath>

namespace owqc::random {
namespace {

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, Engine& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = cplx{normal(rng), normal(rng)};
    }
    return m;
}

}  // namespace

StateVector state(int num_qubits, Engine& rng) {
    return StateVector::normalized(num_qubits, gaussian(static_cast<Eigen::Index>(dim_of(num_qubits)), 1, rng).col(0));
}

QOperator unitary(std::vector<int> qubits, Engine& rng) {
    const auto d = static_cast<Eigen::Index>(dim_of(static_cast<int>(qubits.size())));
    Eigen::HouseholderQR<Matrix> qr(gaussian(d, d, rng));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return QOperator::unitary(std::move(q), std::move(qubits));
}

DensityMatrix density(int num_qubits, Engine& rng) {
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    const Matrix g = gaussian(d, d, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(num_qubits, (rho + rho.adjoint()) * 0.5);
}

DensityMatrix hermitian(int num_qubits, Engine& rng) {
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    const Matrix g = gaussian(d, d, rng);
    return DensityMatrix(num_qubits, (g + g.adjoint()) * 0.5, DensityKind::deviation);
}

}  // namespace owqc::random
