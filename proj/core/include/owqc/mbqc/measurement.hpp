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
#include <cstdint>
#include <optional>
#include <random>

#include "owqc/state.hpp"

namespace owqc::mbqc {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20080101;

/// Measurement basis in the x-y plane of the Bloch sphere.
struct MeasurementBasis {
    double alpha = 0.0;

    /// |alpha_+> for outcome 0, |alpha_-> for outcome 1.
    StateVector ket(int outcome) const { return StateVector::xy_plane(alpha, outcome); }
};

struct MeasurementRecord {
    int qubit = 0;
    double alpha = 0.0;
    int outcome = 0;  // 0 <=> |alpha_+>, 1 <=> |alpha_->
    double probability = 0.0;
};

struct MeasurementResult {
    MeasurementRecord record;
    /// Post-measurement state; the measured qubit stays in the register,
    /// projected onto the observed basis ket.
    StateVector state;
};

/// Probability of each outcome for measuring qubit q in the given basis.
std::array<double, 2> outcome_probabilities(const StateVector& state, int q, const MeasurementBasis& basis);

/// Projects onto the forced outcome. Throws std::domain_error if that branch
/// has probability <= 1e-12.
MeasurementResult measure_xy(const StateVector& state, int q, const MeasurementBasis& basis, int forced);

/// Samples the outcome from the Born probabilities.
MeasurementResult measure_xy(const StateVector& state, int q, const MeasurementBasis& basis, Rng& rng);

}  // namespace owqc::mbqc
