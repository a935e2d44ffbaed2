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

#include "owqc/nmr/pipeline.hpp"

#include <stdexcept>

#include "owqc/nmr/gradient.hpp"

namespace owqc::nmr {

EnsembleDJResult run_dj_ensemble(mbqc::Oracle f, const MoleculeSpec& spec, const EnsembleOptions& options) {
    if (spec.num_spins() != 4) throw std::invalid_argument("run_dj_ensemble: needs a 4-spin molecule");
    const mbqc::FeedForwardRule rule = mbqc::FeedForwardRule::for_oracle(f);

    EnsembleDJResult result;
    result.oracle = f;
    result.control_a = rule.control_a();
    result.control_b = rule.control_b();

    EnsembleState state = prepare_ghz(spec, {options.epsilon, options.time_budget_s});
    state = gradient_crusher(state);
    result.graph_state = ghz_to_graph(state);

    state = mimic_measurement(result.graph_state, 1, rule.alpha1);
    state = mimic_measurement(state, 2, rule.alpha2);
    for (std::size_t b = 0; b < 4; ++b) {
        double pop = 0.0;
        for (std::size_t rest = 0; rest < 4; ++rest) pop += state.rho(b * 4 + rest, b * 4 + rest).real();
        result.branch_populations[b] = pop;
    }

    result.final_state = conditional_feed_forward(state, rule);
    result.control_qubit_sx = expectation(result.final_state.rho, gates::x(4));
    result.verdict = result.control_qubit_sx >= 0.0 ? mbqc::Verdict::constant : mbqc::Verdict::balanced;
    return result;
}

DensityMatrix projective_branch_average(mbqc::Oracle f, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("projective_branch_average: bad epsilon");
    const mbqc::FeedForwardRule rule = mbqc::FeedForwardRule::for_oracle(f);
    std::vector<QOperator> to_labels = measurement_prerotation(1, rule.alpha1);
    for (QOperator& r : measurement_prerotation(2, rule.alpha2)) to_labels.push_back(std::move(r));

    Matrix mixture = Matrix::Zero(16, 16);
    for (const mbqc::Branch& b : mbqc::kAllBranches) {
        const mbqc::DJOutcome out = mbqc::run_dj(f, b);
        double p = 1.0;
        for (const mbqc::MeasurementRecord& rec : out.records) p *= rec.probability;
        StateVector psi = out.final_state;
        for (const QOperator& r : to_labels) psi = apply_unitary(psi, r);
        mixture += p * psi.amplitudes() * psi.amplitudes().adjoint();
    }
    Matrix rho = (1.0 - epsilon) * Matrix::Identity(16, 16) / 16.0 + epsilon * mixture;
    return DensityMatrix(4, (rho + rho.adjoint()) * 0.5);
}

}  // namespace owqc::nmr
