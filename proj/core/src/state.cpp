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

#include "owqc/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace owqc {
namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits_);
    if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(num_qubits_)) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(dim_of(num_qubits_)) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kExactTol) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized (norm " +
                                    std::to_string(amplitudes_.norm()) + ")");
    }
}

StateVector StateVector::normalized(int num_qubits, Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    amplitudes /= norm;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    check_qubit_count(num_qubits);
    if (index >= dim_of(num_qubits)) throw std::out_of_range("StateVector::basis: index out of range");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_bits(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("from_bits: expected only '0'/'1'");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::plus() { return xy_plane(0.0, 0); }
StateVector StateVector::minus() { return xy_plane(0.0, 1); }

StateVector StateVector::xy_plane(double alpha, int outcome) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("xy_plane: outcome must be 0 or 1");
    const double sign = outcome == 0 ? 1.0 : -1.0;
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), sign * std::polar(1.0, alpha) / std::sqrt(2.0);
    return StateVector(1, std::move(v));
}

StateVector StateVector::product(std::span<const StateVector> factors) {
    if (factors.empty()) throw std::invalid_argument("StateVector::product: no factors");
    StateVector out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = out.tensor(factors[i]);
    return out;
}

StateVector StateVector::tensor(const StateVector& other) const {
    const int n = num_qubits_ + other.num_qubits_;
    check_qubit_count(n);
    Vector v(static_cast<Eigen::Index>(dim_of(n)));
    const Eigen::Index inner_dim = other.amplitudes_.size();
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
        v.segment(i * inner_dim, inner_dim) = amplitudes_(i) * other.amplitudes_;
    }
    return StateVector::normalized(n, std::move(v));
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

DensityMatrix::DensityMatrix(int num_qubits, Matrix matrix, DensityKind kind)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)), kind_(kind) {
    check_qubit_count(num_qubits_);
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits_));
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: expected a " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix");
    }
    if (!is_hermitian(matrix_)) throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (kind_ == DensityKind::physical && std::abs(matrix_.trace() - cplx{1.0}) > kExactTol) {
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(matrix_.trace().real()) +
                                    " != 1 for a physical state");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    check_qubit_count(num_qubits);
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    return DensityMatrix(num_qubits, Matrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

bool DensityMatrix::is_positive_semidefinite(double tol) const {
    return min_eigenvalue(matrix_) >= -tol;
}

double overlap(const DensityMatrix& rho, const StateVector& psi) {
    if (rho.dim() != psi.dim()) throw std::invalid_argument("overlap: dimension mismatch");
    return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

}  // namespace owqc
