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

#include "owqc/mbqc/dj.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "owqc/mbqc/graph.hpp"

namespace owqc::mbqc {
namespace {

constexpr double kVerdictTol = 1e-9;

Matrix power(const Matrix& pauli, int exponent) { return exponent % 2 == 0 ? gates::pauli_i() : pauli; }

Verdict verdict_from(double sx) {
    if (std::abs(sx - 1.0) <= kVerdictTol) return Verdict::constant;
    if (std::abs(sx + 1.0) <= kVerdictTol) return Verdict::balanced;
    throw std::logic_error("DJ readout <sigma_x> = " + std::to_string(sx) + " is not +-1");
}

}  // namespace

std::string_view to_string(Oracle f) {
    switch (f) {
        case Oracle::f1: return "f1";
        case Oracle::f2: return "f2";
        case Oracle::f3: return "f3";
        case Oracle::f4: return "f4";
    }
    throw std::invalid_argument("unknown oracle");
}

Oracle parse_oracle(std::string_view text) {
    for (Oracle f : kAllOracles) {
        if (text == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown oracle '" + std::string(text) + "' (expected f1..f4)");
}

int oracle_value(Oracle f, int x) {
    switch (f) {
        case Oracle::f1: return 0;
        case Oracle::f2: return 1;
        case Oracle::f3: return x & 1;
        case Oracle::f4: return 1 ^ (x & 1);
    }
    throw std::invalid_argument("unknown oracle");
}

bool is_constant(Oracle f) { return oracle_value(f, 0) == oracle_value(f, 1); }

std::string_view to_string(Verdict v) { return v == Verdict::constant ? "constant" : "balanced"; }

FeedForwardRule FeedForwardRule::for_oracle(Oracle f) {
    FeedForwardRule rule;
    rule.oracle = f;
    switch (f) {
        case Oracle::f1: rule.alpha1 = 0.0; rule.z_offset = 0; rule.x_offset = 1; break;
        case Oracle::f2: rule.alpha1 = 0.0; rule.z_offset = 0; rule.x_offset = 0; break;
        case Oracle::f3: rule.alpha1 = kPi; rule.z_offset = 1; rule.x_offset = 0; break;
        case Oracle::f4: rule.alpha1 = kPi; rule.z_offset = 1; rule.x_offset = 1; break;
    }
    return rule;
}

Matrix FeedForwardRule::ff3(int s1, int s2) const {
    return power(gates::pauli_z(), z3_exponent(s1)) * power(gates::pauli_x(), x3_exponent(s2));
}

Matrix FeedForwardRule::ff4(int s1) const { return power(gates::pauli_z(), z4_exponent(s1)); }

StateVector feed_forward(const StateVector& state, const FeedForwardRule& rule, int s1, int s2) {
    if (state.num_qubits() < 4) throw std::invalid_argument("feed_forward: needs physical qubits 3 and 4");
    StateVector out = apply_unitary(state, QOperator::unitary(rule.ff3(s1, s2), {3}));
    return apply_unitary(out, QOperator::unitary(rule.ff4(s1), {4}));
}

QOperator oracle_unitary(Oracle f, int control, int target) {
    Matrix xor_map = Matrix::Zero(4, 4);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) xor_map(2 * x + (y ^ oracle_value(f, x)), 2 * x + y) = 1.0;
    }
    const Matrix z_target = kron(gates::pauli_i(), gates::pauli_z());
    return QOperator::unitary(xor_map * z_target, {control, target});
}

double dj_circuit_readout(Oracle f) {
    const std::array<StateVector, 2> inputs{StateVector::plus(), StateVector::plus()};
    const StateVector out = apply_unitary(StateVector::product(inputs), oracle_unitary(f, 1, 2));
    return expectation(out, gates::x(1));
}

DJOutcome run_dj(Oracle f, std::optional<Branch> branch, Rng& rng) {
    const FeedForwardRule rule = FeedForwardRule::for_oracle(f);
    const std::array<StateVector, 4> inputs{StateVector::plus(), StateVector::plus(), StateVector::plus(),
                                            StateVector::plus()};
    StateVector state = prepare_graph_state(inputs);

    DJOutcome outcome;
    outcome.oracle = f;
    const MeasurementBasis b1{rule.alpha1};
    const MeasurementBasis b2{rule.alpha2};
    MeasurementResult m1 = branch ? measure_xy(state, 1, b1, branch->s1) : measure_xy(state, 1, b1, rng);
    MeasurementResult m2 = branch ? measure_xy(m1.state, 2, b2, branch->s2) : measure_xy(m1.state, 2, b2, rng);
    outcome.branch = {m1.record.outcome, m2.record.outcome};
    outcome.records = {m1.record, m2.record};

    outcome.final_state = feed_forward(m2.state, rule, outcome.branch.s1, outcome.branch.s2);
    outcome.control_qubit_sx = expectation(outcome.final_state, gates::x(4));
    outcome.verdict = verdict_from(outcome.control_qubit_sx);
    return outcome;
}

DJOutcome run_dj(Oracle f, Branch branch) {
    Rng unused(kDefaultSeed);
    return run_dj(f, branch, unused);
}

}  // namespace owqc::mbqc
