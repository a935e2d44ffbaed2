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

#include "owqc/nmr/gradient.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace owqc::nmr {
namespace {

bool is_angle(double alpha, double target) { return std::abs(std::remainder(alpha - target, 2.0 * kPi)) < 1e-12; }

/// |label><label| (x) op + |1-label><1-label| (x) I on (control, target).
QOperator conditioned(int control, int label, const Matrix& op, int target) {
    Matrix m = Matrix::Identity(4, 4);
    m.block(2 * label, 2 * label, 2, 2) = op;
    return QOperator::unitary(std::move(m), {control, target});
}

}  // namespace

std::vector<double> total_fz(int num_qubits) {
    std::vector<double> m(dim_of(num_qubits), 0.0);
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (int q = 1; q <= num_qubits; ++q) m[x] += ((x >> (num_qubits - q)) & 1U) ? -0.5 : 0.5;
    }
    return m;
}

EnsembleState gradient_pulse(const EnsembleState& state, double phi) {
    const std::vector<double> fz = total_fz(state.num_qubits());
    Matrix m = state.rho.matrix();
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            m(a, b) *= std::polar(1.0, -phi * (fz[static_cast<std::size_t>(a)] - fz[static_cast<std::size_t>(b)]));
        }
    }
    return {DensityMatrix(state.num_qubits(), std::move(m), state.rho.kind()), state.elapsed_s};
}

EnsembleState gradient_average(const EnsembleState& state, int samples) {
    return run_gradient_sequence(state, {PulseStep::gradient()}, samples);
}

EnsembleState gradient_crusher(const EnsembleState& state) {
    const std::vector<double> fz = total_fz(state.num_qubits());
    Matrix m = state.rho.matrix();
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            if (fz[static_cast<std::size_t>(a)] != fz[static_cast<std::size_t>(b)]) m(a, b) = 0.0;
        }
    }
    return {DensityMatrix(state.num_qubits(), std::move(m), state.rho.kind()), state.elapsed_s};
}

std::vector<PulseStep> pz_steps(int q) {
    const auto ry = [](int k) { return PulseStep::rotation(Axis::y, kPi, k); };
    const auto rmy = [](int k) { return PulseStep::rotation(Axis::minus_y, kPi, k); };
    const PulseStep g = PulseStep::gradient();
    if (q == 1) {
        return {g, ry(2), ry(4), g, ry(3), ry(4), g, rmy(2), rmy(4), g, rmy(3), rmy(4)};
    }
    if (q == 2) {
        return {ry(3), ry(4), g, ry(1), ry(4), g, rmy(3), rmy(4), g, rmy(1), rmy(4), g};
    }
    throw std::invalid_argument("pz_sequence: only qubits 1 and 2 have a refocused sequence (got " +
                                std::to_string(q) + ")");
}

EnsembleState run_gradient_sequence(const EnsembleState& state, const std::vector<PulseStep>& steps, int samples) {
    if (samples < 1) throw std::invalid_argument("gradient averaging needs at least one sample");
    std::vector<QOperator> rotations;
    for (const PulseStep& s : steps) {
        if (s.kind == PulseStep::Kind::rotation) rotations.push_back(gates::rotation(s.axis, s.angle, s.qubit));
    }
    Matrix sum = Matrix::Zero(state.rho.matrix().rows(), state.rho.matrix().cols());
    for (int i = 0; i < samples; ++i) {
        const double phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples);
        EnsembleState current = state;
        std::size_t next_rotation = 0;
        for (const PulseStep& s : steps) {
            if (s.kind == PulseStep::Kind::gradient) {
                current = gradient_pulse(current, phi);
            } else {
                current = apply(current, rotations[next_rotation++]);
            }
        }
        sum += current.rho.matrix();
    }
    sum /= static_cast<double>(samples);
    return {DensityMatrix(state.num_qubits(), (sum + sum.adjoint()) * 0.5, state.rho.kind()), state.elapsed_s};
}

EnsembleState pz_sequence(const EnsembleState& state, int q, int samples) {
    const std::vector<PulseStep> steps = pz_steps(q);
    if (state.num_qubits() != 4) throw std::invalid_argument("pz_sequence: needs a 4-qubit state");
    return run_gradient_sequence(state, steps, samples);
}

std::vector<QOperator> measurement_prerotation(int q, double alpha, bool allow_general_angle) {
    if (is_angle(alpha, 0.0)) return {gates::rotation(Axis::minus_y, kPi / 2.0, q)};
    if (q == 1 && is_angle(alpha, kPi)) return {gates::rotation(Axis::y, kPi / 2.0, q)};
    if (!allow_general_angle) {
        throw std::invalid_argument("mimic_measurement: basis angle " + std::to_string(alpha) + " on qubit " +
                                    std::to_string(q) + " needs the general-angle extension");
    }
    return {gates::rotation(Axis::z, -alpha, q), gates::rotation(Axis::minus_y, kPi / 2.0, q)};
}

EnsembleState mimic_measurement(const EnsembleState& state, int q, double alpha, bool allow_general_angle) {
    if (q != 1 && q != 2) throw std::invalid_argument("mimic_measurement: only qubits 1 and 2 can be measured");
    EnsembleState out = state;
    for (const QOperator& r : measurement_prerotation(q, alpha, allow_general_angle)) out = apply(out, r);
    return pz_sequence(out, q);
}

std::vector<QOperator> conditional_feed_forward_gates(const mbqc::FeedForwardRule& rule) {
    return {
        conditioned(2, rule.control_a(), gates::pauli_x(), 3),
        conditioned(1, rule.control_b(), gates::pauli_z(), 3),
        conditioned(1, 1, gates::pauli_z(), 4),
    };
}

EnsembleState conditional_feed_forward(const EnsembleState& state, const mbqc::FeedForwardRule& rule) {
    if (state.num_qubits() != 4) throw std::invalid_argument("conditional_feed_forward: needs 4 qubits");
    EnsembleState out = state;
    for (const QOperator& g : conditional_feed_forward_gates(rule)) out = apply(out, g);
    return out;
}

}  // namespace owqc::nmr
