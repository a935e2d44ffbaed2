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

#include <string_view>
#include <vector>

#include "owqc/nmr/ensemble.hpp"

namespace owqc::nmr {

enum class ReferencePhase {
    /// Thermal equilibrium after a [pi/2]_y pulse (|+> on the observed spin)
    /// gives positive absorption lines.
    thermal_pi2_y_positive,
};

std::string_view to_string(ReferencePhase phase);

struct SpectrumData {
    std::vector<double> frequencies_hz;  // uniform, ascending
    std::vector<cplx> amplitudes;
    int observe_qubit = 0;
    double duration_s = 0.0;
    std::size_t samples = 0;
    ReferencePhase reference_phase = ReferencePhase::thermal_pi2_y_positive;
};

struct SpectrumOptions {
    double duration_s = 4.0;
    std::size_t samples = 16384;
    /// Apply the observed spin's T2 decay to the FID.
    bool apply_t2 = true;
};

/// FID s(t) = Tr(rho(t) (sigma_x + i sigma_y)^(observe)) under H0 with T2
/// decay, transformed with first-point halving and scaled by the dwell time.
/// Requires samples to be a power of two >= 256 and duration > 0.
SpectrumData synthesize_spectrum(const EnsembleState& state, const MoleculeSpec& spec, int observe,
                                 const SpectrumOptions& options = {});

/// Raw FID samples, exposed for cross-checks.
std::vector<cplx> free_induction_decay(const EnsembleState& state, const MoleculeSpec& spec, int observe,
                                       const SpectrumOptions& options);

struct SpectralLine {
    double frequency_hz;
    double amplitude;  // real part at the peak
};

/// Local extrema of |Re S| that exceed rel_threshold * max |Re S|.
std::vector<SpectralLine> find_lines(const SpectrumData& data, double rel_threshold = 0.05);

}  // namespace owqc::nmr
