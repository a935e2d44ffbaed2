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

#include "owqc/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace owqc {
namespace {

void check_targets(const std::vector<int>& qubits, int total_qubits) {
    for (int q : qubits) {
        if (q < 1 || q > total_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " outside [1, " +
                                    std::to_string(total_qubits) + "]");
        }
    }
}

/// Local-index -> register-index offsets for the target bits, plus the
/// sorted bit positions used to enumerate the untouched bits.
struct TargetLayout {
    std::vector<std::size_t> offsets;
    std::vector<int> sorted_positions;
};

TargetLayout layout_for(const std::vector<int>& qubits, int n) {
    const int k = static_cast<int>(qubits.size());
    TargetLayout layout;
    layout.offsets.assign(std::size_t{1} << k, 0);
    for (std::size_t local = 0; local < layout.offsets.size(); ++local) {
        std::size_t off = 0;
        for (int i = 0; i < k; ++i) {
            const std::size_t bit = (local >> (k - 1 - i)) & 1U;
            off |= bit << (n - qubits[static_cast<std::size_t>(i)]);
        }
        layout.offsets[local] = off;
    }
    for (int q : qubits) layout.sorted_positions.push_back(n - q);
    std::sort(layout.sorted_positions.begin(), layout.sorted_positions.end());
    return layout;
}

/// Spreads the bits of `compact` around zeros at the sorted target positions.
std::size_t insert_zero_bits(std::size_t compact, const std::vector<int>& sorted_positions) {
    for (int pos : sorted_positions) {
        const std::size_t low = compact & ((std::size_t{1} << pos) - 1);
        compact = ((compact >> pos) << (pos + 1)) | low;
    }
    return compact;
}

/// Applies op to the row index of m in place (every column is a ket).
void apply_on_rows(Matrix& m, const Matrix& op, const std::vector<int>& qubits, int n) {
    const TargetLayout layout = layout_for(qubits, n);
    const auto local_dim = static_cast<Eigen::Index>(layout.offsets.size());
    const std::size_t blocks = dim_of(n) >> qubits.size();
    Matrix gathered(local_dim, m.cols());
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t base = insert_zero_bits(b, layout.sorted_positions);
        for (Eigen::Index s = 0; s < local_dim; ++s) {
            gathered.row(s) = m.row(static_cast<Eigen::Index>(base + layout.offsets[s]));
        }
        const Matrix updated = op * gathered;
        for (Eigen::Index s = 0; s < local_dim; ++s) {
            m.row(static_cast<Eigen::Index>(base + layout.offsets[s])) = updated.row(s);
        }
    }
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

void check_fits(const QOperator& op, int n, const char* what) {
    if (op.arity() > n) {
        throw std::invalid_argument(std::string(what) + ": operator on " + std::to_string(op.arity()) +
                                    " qubits does not fit a " + std::to_string(n) + "-qubit state");
    }
    check_targets(op.qubits(), n);
}

}  // namespace

QOperator::QOperator(Matrix matrix, std::vector<int> qubits, Check check)
    : matrix_(std::move(matrix)), qubits_(std::move(qubits)) {
    if (qubits_.empty() || static_cast<int>(qubits_.size()) > kMaxQubits) {
        throw std::invalid_argument("QOperator: qubit list must have 1..10 entries");
    }
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        if (qubits_[i] < 1) {
            throw std::out_of_range("QOperator: qubit index " + std::to_string(qubits_[i]) + " < 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits_[i] == qubits_[j]) {
                throw std::invalid_argument("QOperator: duplicate qubit index " + std::to_string(qubits_[i]));
            }
        }
    }
    const auto d = static_cast<Eigen::Index>(dim_of(static_cast<int>(qubits_.size())));
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("QOperator: matrix is not " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (check == Check::unitary) {
        if (!owqc::is_unitary(matrix_)) throw std::invalid_argument("QOperator: matrix is not unitary");
        unitary_ = true;
    }
}

QOperator QOperator::identity(int num_qubits) {
    std::vector<int> qubits(static_cast<std::size_t>(num_qubits));
    for (int q = 1; q <= num_qubits; ++q) qubits[static_cast<std::size_t>(q - 1)] = q;
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    return unitary(Matrix::Identity(d, d), std::move(qubits));
}

QOperator QOperator::adjoint() const {
    return QOperator(matrix_.adjoint(), qubits_, unitary_ ? Check::unitary : Check::none);
}

namespace gates {

Matrix pauli_i() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, -kI, kI, 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix pauli(Axis axis) {
    switch (axis) {
        case Axis::x: return pauli_x();
        case Axis::y: return pauli_y();
        case Axis::z: return pauli_z();
        case Axis::minus_x: return -pauli_x();
        case Axis::minus_y: return -pauli_y();
        case Axis::minus_z: return -pauli_z();
    }
    throw std::invalid_argument("pauli: unknown axis");
}

QOperator x(int q) { return QOperator::unitary(pauli_x(), {q}); }
QOperator y(int q) { return QOperator::unitary(pauli_y(), {q}); }
QOperator z(int q) { return QOperator::unitary(pauli_z(), {q}); }

// sigma_n squares to I, so exp(-i t sigma_n / 2) = cos(t/2) I - i sin(t/2) sigma_n.
Matrix rotation_matrix(Axis axis, double theta) {
    return std::cos(theta / 2.0) * pauli_i() - kI * std::sin(theta / 2.0) * pauli(axis);
}

QOperator rotation(Axis axis, double theta, int q) {
    return QOperator::unitary(rotation_matrix(axis, theta), {q});
}

QOperator pseudo_hadamard(int q) { return rotation(Axis::y, kPi / 2.0, q); }

QOperator zz_phase(int j, int k, double theta) {
    Matrix m = Matrix::Zero(4, 4);
    // sigma_z sigma_z eigenvalues on |00>,|01>,|10>,|11>
    const double parity[4] = {1.0, -1.0, -1.0, 1.0};
    for (int i = 0; i < 4; ++i) m(i, i) = std::polar(1.0, -theta * parity[i]);
    return QOperator::unitary(std::move(m), {j, k});
}

QOperator cnot(int control, int target) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return QOperator::unitary(std::move(m), {control, target});
}

QOperator cz(int j, int k) {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return QOperator::unitary(std::move(m), {j, k});
}

QOperator projector(const StateVector& ket, std::vector<int> qubits) {
    if (static_cast<int>(qubits.size()) != ket.num_qubits()) {
        throw std::invalid_argument("projector: qubit list does not match ket size");
    }
    return QOperator(ket.amplitudes() * ket.amplitudes().adjoint(), std::move(qubits));
}

}  // namespace gates

QOperator embed_operator(const QOperator& op, int total_qubits) {
    if (total_qubits < 1 || total_qubits > kMaxQubits) {
        throw std::invalid_argument("embed_operator: total qubit count outside [1, 10]");
    }
    check_fits(op, total_qubits, "embed_operator");
    const auto d = static_cast<Eigen::Index>(dim_of(total_qubits));
    Matrix full = Matrix::Identity(d, d);
    apply_on_rows(full, op.matrix(), op.qubits(), total_qubits);
    return QOperator(std::move(full), QOperator::identity(total_qubits).qubits(),
                     op.is_unitary() ? QOperator::Check::unitary : QOperator::Check::none);
}

QOperator compose(std::span<const QOperator> ops, int total_qubits) {
    const auto d = static_cast<Eigen::Index>(dim_of(total_qubits));
    Matrix product = Matrix::Identity(d, d);
    bool all_unitary = true;
    for (const QOperator& op : ops) {
        check_fits(op, total_qubits, "compose");
        apply_on_rows(product, op.matrix(), op.qubits(), total_qubits);
        all_unitary = all_unitary && op.is_unitary();
    }
    return QOperator(std::move(product), QOperator::identity(total_qubits).qubits(),
                     all_unitary ? QOperator::Check::unitary : QOperator::Check::none);
}

Vector apply_operator(const Vector& amplitudes, int num_qubits, const QOperator& op) {
    check_fits(op, num_qubits, "apply_operator");
    if (static_cast<std::size_t>(amplitudes.size()) != dim_of(num_qubits)) {
        throw std::invalid_argument("apply_operator: amplitude count does not match qubit count");
    }
    Matrix column = amplitudes;
    apply_on_rows(column, op.matrix(), op.qubits(), num_qubits);
    return column.col(0);
}

StateVector apply_unitary(const StateVector& state, const QOperator& u) {
    if (!u.is_unitary()) throw std::invalid_argument("apply_unitary: operator is not flagged unitary");
    return StateVector(state.num_qubits(), apply_operator(state.amplitudes(), state.num_qubits(), u));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const QOperator& u) {
    if (!u.is_unitary()) throw std::invalid_argument("apply_unitary: operator is not flagged unitary");
    const int n = rho.num_qubits();
    check_fits(u, n, "apply_unitary");
    Matrix m = rho.matrix();
    apply_on_rows(m, u.matrix(), u.qubits(), n);  // U rho
    Matrix t = m.adjoint();
    apply_on_rows(t, u.matrix(), u.qubits(), n);  // U (U rho)^dagger
    return DensityMatrix(n, hermitian_part(t.adjoint()), rho.kind());
}

double expectation(const DensityMatrix& rho, const QOperator& obs) {
    if (!is_hermitian(obs.matrix())) throw std::invalid_argument("expectation: observable is not Hermitian");
    const int n = rho.num_qubits();
    check_fits(obs, n, "expectation");
    Matrix m = rho.matrix();
    apply_on_rows(m, obs.matrix(), obs.qubits(), n);  // obs rho
    const cplx value = m.trace();
    if (std::abs(value.imag()) > kExactTol) {
        throw std::logic_error("expectation: imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

double expectation(const StateVector& psi, const QOperator& obs) {
    return expectation(DensityMatrix::from_pure(psi), obs);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
    std::vector<int> kept(keep.begin(), keep.end());
    check_targets(kept, n);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (kept[i] == kept[j]) throw std::invalid_argument("partial_trace: duplicate qubit in keep list");
        }
    }
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) traced.push_back(q);
    }
    const TargetLayout keep_layout = layout_for(kept, n);
    std::vector<std::size_t> traced_offsets{0};
    if (!traced.empty()) traced_offsets = layout_for(traced, n).offsets;

    const auto kd = static_cast<Eigen::Index>(keep_layout.offsets.size());
    Matrix reduced = Matrix::Zero(kd, kd);
    for (Eigen::Index r = 0; r < kd; ++r) {
        for (Eigen::Index c = 0; c < kd; ++c) {
            cplx sum{0.0, 0.0};
            for (std::size_t t : traced_offsets) {
                sum += rho(keep_layout.offsets[static_cast<std::size_t>(r)] | t,
                           keep_layout.offsets[static_cast<std::size_t>(c)] | t);
            }
            reduced(r, c) = sum;
        }
    }
    return DensityMatrix(static_cast<int>(kept.size()), std::move(reduced), rho.kind());
}

DensityMatrix dephase_qubit(const DensityMatrix& rho, int q) {
    const int n = rho.num_qubits();
    check_targets({q}, n);
    const std::size_t mask = std::size_t{1} << (n - q);
    Matrix m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (((static_cast<std::size_t>(r) ^ static_cast<std::size_t>(c)) & mask) != 0) m(r, c) = 0.0;
        }
    }
    return DensityMatrix(n, std::move(m), rho.kind());
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::vector<int> qubits) {
    if (kraus.empty()) throw std::invalid_argument("apply_channel: no Kraus operators");
    const int n = rho.num_qubits();
    const auto d = static_cast<Eigen::Index>(dim_of(static_cast<int>(qubits.size())));
    Matrix completeness = Matrix::Zero(d, d);
    for (const Matrix& k : kraus) {
        if (k.rows() != d || k.cols() != d) throw std::invalid_argument("apply_channel: Kraus shape mismatch");
        completeness += k.adjoint() * k;
    }
    if (max_abs_diff(completeness, Matrix::Identity(d, d)) > kExactTol) {
        throw std::invalid_argument("apply_channel: Kraus operators are not trace preserving");
    }
    check_targets(qubits, n);
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const Matrix& k : kraus) {
        Matrix m = rho.matrix();
        apply_on_rows(m, k, qubits, n);
        Matrix t = m.adjoint();
        apply_on_rows(t, k, qubits, n);
        out += t.adjoint();
    }
    return DensityMatrix(n, hermitian_part(out), rho.kind());
}

}  // namespace owqc
