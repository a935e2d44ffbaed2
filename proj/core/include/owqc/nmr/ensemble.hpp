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

#include <optional>
#include <vector>

#include "owqc/nmr/molecule.hpp"
#include "owqc/ops.hpp"
#include "owqc/state.hpp"

namespace owqc::nmr {

struct EnsembleState {
    DensityMatrix rho = DensityMatrix::maximally_mixed(1);
    double elapsed_s = 0.0;

    bool is_deviation() const { return rho.is_deviation(); }
    int num_qubits() const { return rho.num_qubits(); }
};

/// Preparation time that the GHZ network is charged when relaxation
/// accounting is switched on.
inline constexpr double kDefaultPrepBudgetS = 0.085;
/// Relaxation is applied in slices no longer than this.
inline constexpr double kMaxRelaxationSliceS = 1e-3;

/// (1 - eps) I / 2^n + eps |0..0><0..0|.
EnsembleState pseudopure_init(const MoleculeSpec& spec, double epsilon);

/// Eigenvalues of H0 = sum_j omega_j I_z^j + 2 pi sum_{j<k} J_jk I_z^j I_z^k
/// in rad/s, indexed by computational basis state.
std::vector<double> h0_diagonal(const MoleculeSpec& spec);

/// rho -> exp(-i H0 t) rho exp(i H0 t), applied elementwise since H0 is diagonal.
EnsembleState free_evolution(const EnsembleState& state, const MoleculeSpec& spec, double t);

/// Free-evolution time that realizes exp(-i pi/4 sigma_z^j sigma_z^k) under
/// the J coupling alone, 1 / (2 J).
double coupling_gate_time(const MoleculeSpec& spec, int j, int k);

/// The five NMR factors of a CNOT, first element applied first:
/// R_-z^k(pi/2), R_-z^j(pi/2), R_-x^k(pi/2), exp(-i pi/4 sz^j sz^k), R_y^k(pi/2).
std::vector<QOperator> cnot_sequence(int control, int target);

/// Ordered product of cnot_sequence on the (control, target) pair. Equals the
/// textbook CNOT up to a global phase.
QOperator cnot_decomposed(int control, int target, const MoleculeSpec& spec);

/// (|0110> + |1001>)/sqrt(2), the GHZ state that the local rotations of
/// ghz_to_graph carry onto the star graph state.
StateVector target_ghz_state();

/// Elementary steps of the GHZ network from |0000>: pseudo-Hadamard on 1,
/// decomposed CNOTs 1->2, 1->3, 1->4, then sigma_x on 2 and 3.
std::vector<QOperator> ghz_network();

struct PrepOptions {
    double epsilon = 1.0;
    /// When set, the budget is split evenly over the network steps and each
    /// step is followed by relaxation for its share.
    std::optional<double> time_budget_s;
};

EnsembleState prepare_ghz(const MoleculeSpec& spec, const PrepOptions& options = {});
EnsembleState prepare_ghz(const EnsembleState& initial, const MoleculeSpec& spec,
                          std::optional<double> time_budget_s = std::nullopt);

/// R_-y^(1)(pi/2) R_-y^(3)(pi/2) R_-y^(4)(pi/2).
std::vector<QOperator> ghz_to_graph_rotations();
EnsembleState ghz_to_graph(const EnsembleState& state);

EnsembleState apply(const EnsembleState& state, const QOperator& u);

}  // namespace owqc::nmr
