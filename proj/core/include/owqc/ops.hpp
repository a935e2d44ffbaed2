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
#include <vector>

#include "owqc/linalg.hpp"
#include "owqc/state.hpp"

namespace owqc {

/// A 2^k x 2^k operator acting on an ordered list of (1-based) qubits. The
/// first listed qubit is the most significant bit of the local index.
class QOperator {
public:
    enum class Check { none, unitary };

    /// Throws std::invalid_argument on a shape mismatch, a repeated or
    /// non-positive qubit index, or (with Check::unitary) a U^dagger U
    /// deviation above 1e-10.
    QOperator(Matrix matrix, std::vector<int> qubits, Check check = Check::none);

    static QOperator unitary(Matrix matrix, std::vector<int> qubits) {
        return QOperator(std::move(matrix), std::move(qubits), Check::unitary);
    }
    static QOperator identity(int num_qubits);

    const Matrix& matrix() const { return matrix_; }
    const std::vector<int>& qubits() const { return qubits_; }
    int arity() const { return static_cast<int>(qubits_.size()); }
    bool is_unitary() const { return unitary_; }

    QOperator adjoint() const;

private:
    Matrix matrix_;
    std::vector<int> qubits_;
    bool unitary_ = false;
};

enum class Axis { x, y, z, minus_x, minus_y, minus_z };

namespace gates {

Matrix pauli_i();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix pauli(Axis axis);

QOperator x(int q);
QOperator y(int q);
QOperator z(int q);

/// R_n(theta) = exp(-i theta sigma_n / 2); minus axes negate sigma_n.
Matrix rotation_matrix(Axis axis, double theta);
QOperator rotation(Axis axis, double theta, int q);

/// exp(-i pi sigma_y / 4), the NMR stand-in for the Hadamard gate.
QOperator pseudo_hadamard(int q);

/// exp(-i theta sigma_z^(j) sigma_z^(k)).
QOperator zz_phase(int j, int k, double theta);

/// |0><0|_c (x) I + |1><1|_c (x) sigma_x.
QOperator cnot(int control, int target);

/// |0><0|_j (x) I + |1><1|_j (x) sigma_z.
QOperator cz(int j, int k);

/// |psi><psi| on the qubits of a (possibly multi-qubit) ket.
QOperator projector(const StateVector& ket, std::vector<int> qubits);

}  // namespace gates

/// Full 2^n x 2^n matrix acting as op on its qubits and identity elsewhere.
QOperator embed_operator(const QOperator& op, int total_qubits);

/// Product of operators on an n-qubit register; ops[0] is applied first.
QOperator compose(std::span<const QOperator> ops, int total_qubits);

StateVector apply_unitary(const StateVector& state, const QOperator& u);
DensityMatrix apply_unitary(const DensityMatrix& rho, const QOperator& u);

/// Applies a (not necessarily unitary) operator to the ket without
/// renormalizing. Used for projections.
Vector apply_operator(const Vector& amplitudes, int num_qubits, const QOperator& op);

/// Tr(rho obs). Throws if obs is not Hermitian or the trace has an imaginary
/// part above 1e-10.
double expectation(const DensityMatrix& rho, const QOperator& obs);
double expectation(const StateVector& psi, const QOperator& obs);

/// Reduced state on `keep`, in the listed order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Zeroes every element connecting |0>_q and |1>_q.
DensityMatrix dephase_qubit(const DensityMatrix& rho, int q);

/// rho -> sum_i K_i rho K_i^dagger with the Kraus operators acting on
/// `qubits`. Throws unless sum K^dagger K = I within 1e-10.
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::vector<int> qubits);

}  // namespace owqc
