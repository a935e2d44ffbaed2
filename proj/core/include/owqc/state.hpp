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

#pragma once

#include <span>
#include <string_view>

#include "owqc/linalg.hpp"

namespace owqc {

/// Pure state of n qubits. Qubit 1 is the most significant bit of the basis
/// index, so |q1 q2 ... qn> reads left to right like a ket.
class StateVector {
public:
    /// Throws std::invalid_argument unless amplitudes has length 2^n and unit norm.
    StateVector(int num_qubits, Vector amplitudes);

    /// Rescales amplitudes to unit norm; throws if the vector is zero.
    static StateVector normalized(int num_qubits, Vector amplitudes);

    static StateVector basis(int num_qubits, std::size_t index);
    /// Basis ket from a bit string such as "0110".
    static StateVector from_bits(std::string_view bits);
    static StateVector zero() { return basis(1, 0); }
    static StateVector one() { return basis(1, 1); }
    static StateVector plus();
    static StateVector minus();
    /// |alpha_+-> = (|0> +- e^{i alpha}|1>)/sqrt(2); outcome 0 is '+'.
    static StateVector xy_plane(double alpha, int outcome);
    /// Tensor product, first factor on qubit 1.
    static StateVector product(std::span<const StateVector> factors);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    cplx operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

    StateVector tensor(const StateVector& other) const;

private:
    int num_qubits_;
    Vector amplitudes_;
};

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);
/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

enum class DensityKind {
    physical,   // unit trace
    deviation,  // NMR deviation matrix; trace unconstrained
};

class DensityMatrix {
public:
    /// Validates shape and Hermiticity (1e-10); physical states must also
    /// have unit trace.
    DensityMatrix(int num_qubits, Matrix matrix, DensityKind kind = DensityKind::physical);

    static DensityMatrix from_pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    DensityKind kind() const { return kind_; }
    bool is_deviation() const { return kind_ == DensityKind::deviation; }
    cplx operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    double trace() const { return matrix_.trace().real(); }
    double purity() const;
    bool is_positive_semidefinite(double tol = kChannelTol) const;

private:
    int num_qubits_;
    Matrix matrix_;
    DensityKind kind_;
};

/// <psi|rho|psi>
double overlap(const DensityMatrix& rho, const StateVector& psi);

}  // namespace owqc
