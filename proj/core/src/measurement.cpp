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

#include "owqc/mbqc/measurement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "owqc/ops.hpp"

namespace owqc::mbqc {
namespace {

constexpr double kZeroBranch = 1e-12;

Vector project(const StateVector& state, int q, const MeasurementBasis& basis, int outcome) {
    return apply_operator(state.amplitudes(), state.num_qubits(), gates::projector(basis.ket(outcome), {q}));
}

}  // namespace

std::array<double, 2> outcome_probabilities(const StateVector& state, int q, const MeasurementBasis& basis) {
    std::array<double, 2> p{};
    for (int s = 0; s < 2; ++s) p[static_cast<std::size_t>(s)] = project(state, q, basis, s).squaredNorm();
    return p;
}

MeasurementResult measure_xy(const StateVector& state, int q, const MeasurementBasis& basis, int forced) {
    if (forced != 0 && forced != 1) throw std::invalid_argument("measure_xy: forced outcome must be 0 or 1");
    const Vector projected = project(state, q, basis, forced);
    const double p = projected.squaredNorm();
    if (p <= kZeroBranch) {
        throw std::domain_error("measure_xy: outcome " + std::to_string(forced) + " on qubit " +
                                std::to_string(q) + " has zero probability");
    }
    MeasurementRecord record{q, basis.alpha, forced, std::clamp(p, 0.0, 1.0)};
    return {record, StateVector::normalized(state.num_qubits(), projected)};
}

MeasurementResult measure_xy(const StateVector& state, int q, const MeasurementBasis& basis, Rng& rng) {
    const std::array<double, 2> p = outcome_probabilities(state, q, basis);
    std::uniform_real_distribution<double> uniform(0.0, p[0] + p[1]);
    const int outcome = uniform(rng) < p[0] ? 0 : 1;
    return measure_xy(state, q, basis, outcome);
}

}  // namespace owqc::mbqc
