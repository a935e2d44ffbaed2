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

#include <array>
#include <optional>

#include "owqc/mbqc/dj.hpp"
#include "owqc/nmr/ensemble.hpp"

namespace owqc::nmr {

struct EnsembleDJResult {
    mbqc::Oracle oracle = mbqc::Oracle::f1;
    EnsembleState graph_state;  // after GHZ preparation, crusher, local rotations
    EnsembleState final_state;  // after both mimicked measurements and feed-forward
    double control_qubit_sx = 0.0;
    mbqc::Verdict verdict = mbqc::Verdict::constant;
    /// Populations of the (s1, s2) label subspaces before feed-forward,
    /// ordered 00, 01, 10, 11.
    std::array<double, 4> branch_populations{};
    int control_a = 0;
    int control_b = 0;
};

struct EnsembleOptions {
    double epsilon = 1.0;
    std::optional<double> time_budget_s;
};

/// Pseudopure state -> GHZ network -> gradient crusher -> local rotations ->
/// mimicked measurements of qubits 1 and 2 -> conditional feed-forward.
/// The verdict is read from the sign of <sigma_x^(4)>.
EnsembleDJResult run_dj_ensemble(mbqc::Oracle f, const MoleculeSpec& spec, const EnsembleOptions& options = {});

/// Probability-weighted mixture of the four projective branches of run_dj,
/// with qubits 1 and 2 rotated into the |s> label frame used by the mimicked
/// measurements, blended with the maximally mixed background:
/// (1 - eps) I/16 + eps * sum_b p_b |psi_b><psi_b|.
DensityMatrix projective_branch_average(mbqc::Oracle f, double epsilon = 1.0);

}  // namespace owqc::nmr
