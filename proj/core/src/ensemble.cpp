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

#include "owqc/nmr/ensemble.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "owqc/nmr/relaxation.hpp"

namespace owqc::nmr {
namespace {

/// I_z eigenvalue of qubit q in basis state x: +1/2 for |0>, -1/2 for |1>.
double spin_z(std::size_t x, int q, int n) { return ((x >> (n - q)) & 1U) ? -0.5 : 0.5; }

void check_pair(int j, int k, int n, const char* what) {
    if (j == k) throw std::invalid_argument(std::string(what) + ": control and target must differ");
    if (j < 1 || j > n || k < 1 || k > n) throw std::out_of_range(std::string(what) + ": qubit out of range");
}

EnsembleState relax_for(const EnsembleState& state, const MoleculeSpec& spec, double duration) {
    EnsembleState out = state;
    double remaining = duration;
    while (remaining > 0.0) {
        const double slice = std::min(remaining, kMaxRelaxationSliceS);
        out = relaxation_channel(out, spec, slice);
        remaining -= slice;
    }
    return out;
}

}  // namespace

EnsembleState pseudopure_init(const MoleculeSpec& spec, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("pseudopure_init: polarization must lie in (0, 1]");
    }
    const int n = spec.num_spins();
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Matrix rho = Matrix::Identity(d, d) * ((1.0 - epsilon) / static_cast<double>(d));
    rho(0, 0) += epsilon;
    return {DensityMatrix(n, std::move(rho)), 0.0};
}

std::vector<double> h0_diagonal(const MoleculeSpec& spec) {
    const int n = spec.num_spins();
    std::vector<double> energy(dim_of(n), 0.0);
    for (std::size_t x = 0; x < energy.size(); ++x) {
        double e = 0.0;
        for (int j = 1; j <= n; ++j) {
            e += spec.omega(j) * spin_z(x, j, n);
            for (int k = j + 1; k <= n; ++k) {
                e += 2.0 * kPi * spec.j_hz(j, k) * spin_z(x, j, n) * spin_z(x, k, n);
            }
        }
        energy[x] = e;
    }
    return energy;
}

EnsembleState free_evolution(const EnsembleState& state, const MoleculeSpec& spec, double t) {
    if (t < 0.0) throw std::invalid_argument("free_evolution: negative time");
    if (spec.num_spins() != state.num_qubits()) {
        throw std::invalid_argument("free_evolution: spin count does not match the state");
    }
    const std::vector<double> energy = h0_diagonal(spec);
    Matrix m = state.rho.matrix();
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            m(a, b) *= std::polar(1.0, -(energy[static_cast<std::size_t>(a)] - energy[static_cast<std::size_t>(b)]) * t);
        }
    }
    return {DensityMatrix(state.num_qubits(), std::move(m), state.rho.kind()), state.elapsed_s + t};
}

double coupling_gate_time(const MoleculeSpec& spec, int j, int k) {
    check_pair(j, k, spec.num_spins(), "coupling_gate_time");
    const double coupling = spec.j_hz(j, k);
    if (coupling == 0.0) throw std::domain_error("coupling_gate_time: spins are not coupled");
    return 1.0 / (2.0 * std::abs(coupling));
}

std::vector<QOperator> cnot_sequence(int control, int target) {
    if (control == target) throw std::invalid_argument("cnot_sequence: control and target must differ");
    return {
        gates::rotation(Axis::minus_z, kPi / 2.0, target),
        gates::rotation(Axis::minus_z, kPi / 2.0, control),
        gates::rotation(Axis::minus_x, kPi / 2.0, target),
        gates::zz_phase(control, target, kPi / 4.0),
        gates::rotation(Axis::y, kPi / 2.0, target),
    };
}

QOperator cnot_decomposed(int control, int target, const MoleculeSpec& spec) {
    check_pair(control, target, spec.num_spins(), "cnot_decomposed");
    // Relabel onto a local (control=1, target=2) register.
    const std::vector<QOperator> local = cnot_sequence(1, 2);
    return QOperator::unitary(compose(local, 2).matrix(), {control, target});
}

StateVector target_ghz_state() {
    Vector v = StateVector::from_bits("0110").amplitudes() + StateVector::from_bits("1001").amplitudes();
    return StateVector::normalized(4, std::move(v));
}

std::vector<QOperator> ghz_network() {
    std::vector<QOperator> steps{gates::pseudo_hadamard(1)};
    for (int target : {2, 3, 4}) {
        for (QOperator& g : cnot_sequence(1, target)) steps.push_back(std::move(g));
    }
    steps.push_back(gates::x(2));
    steps.push_back(gates::x(3));
    return steps;
}

EnsembleState apply(const EnsembleState& state, const QOperator& u) {
    return {apply_unitary(state.rho, u), state.elapsed_s};
}

EnsembleState prepare_ghz(const EnsembleState& initial, const MoleculeSpec& spec,
                          std::optional<double> time_budget_s) {
    if (initial.num_qubits() != 4 || spec.num_spins() != 4) {
        throw std::invalid_argument("prepare_ghz: needs a 4-spin system");
    }
    if (time_budget_s && *time_budget_s < 0.0) throw std::invalid_argument("prepare_ghz: negative time budget");
    const std::vector<QOperator> steps = ghz_network();
    const double share = time_budget_s ? *time_budget_s / static_cast<double>(steps.size()) : 0.0;
    EnsembleState state = initial;
    for (const QOperator& step : steps) {
        state = apply(state, step);
        if (time_budget_s) state = relax_for(state, spec, share);
    }
    return state;
}

EnsembleState prepare_ghz(const MoleculeSpec& spec, const PrepOptions& options) {
    if (spec.num_spins() != 4) throw std::invalid_argument("prepare_ghz: needs a 4-spin system");
    return prepare_ghz(pseudopure_init(spec, options.epsilon), spec, options.time_budget_s);
}

std::vector<QOperator> ghz_to_graph_rotations() {
    return {gates::rotation(Axis::minus_y, kPi / 2.0, 1), gates::rotation(Axis::minus_y, kPi / 2.0, 3),
            gates::rotation(Axis::minus_y, kPi / 2.0, 4)};
}

EnsembleState ghz_to_graph(const EnsembleState& state) {
    if (state.num_qubits() != 4) throw std::invalid_argument("ghz_to_graph: needs 4 qubits");
    EnsembleState out = state;
    for (const QOperator& r : ghz_to_graph_rotations()) out = apply(out, r);
    return out;
}

}  // namespace owqc::nmr
