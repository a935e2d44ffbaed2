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

#include <vector>

#include "owqc/mbqc/dj.hpp"
#include "owqc/nmr/ensemble.hpp"

namespace owqc::nmr {

/// Net F_z quantum number of each basis state (sum of I_z eigenvalues).
std::vector<double> total_fz(int num_qubits);

/// rho -> exp(-i phi F_z) rho exp(i phi F_z); all spins share one
/// gyromagnetic ratio.
EnsembleState gradient_pulse(const EnsembleState& state, double phi);

/// Ensemble average of gradient_pulse over `samples` equally spaced phases
/// in [0, 2 pi).
EnsembleState gradient_average(const EnsembleState& state, int samples);

/// Keeps only zero-quantum coherences (equal net F_z on both sides).
EnsembleState gradient_crusher(const EnsembleState& state);

/// One element of a pulse sequence: a gradient or a hard rotation.
struct PulseStep {
    enum class Kind { gradient, rotation };
    Kind kind = Kind::gradient;
    Axis axis = Axis::y;
    double angle = 0.0;
    int qubit = 0;

    static PulseStep gradient() { return {}; }
    static PulseStep rotation(Axis axis, double angle, int qubit) {
        return {Kind::rotation, axis, angle, qubit};
    }
};

/// The refocused gradient sequences that dephase qubit 1 or qubit 2 only.
/// Throws std::invalid_argument for any other qubit.
std::vector<PulseStep> pz_steps(int q);

/// Default number of gradient phases used to average a sequence. The highest
/// Fourier order a 4-gradient sequence can reach on n <= 10 spins is 40.
inline constexpr int kSequencePhaseSamples = 64;

/// Runs a pulse sequence in which every gradient applies the same phase phi,
/// averaged over `samples` equally spaced phi in [0, 2 pi).
EnsembleState run_gradient_sequence(const EnsembleState& state, const std::vector<PulseStep>& steps,
                                    int samples = kSequencePhaseSamples);

/// Literal P_z sequence for qubit q in {1, 2}; equivalent to dephasing q.
EnsembleState pz_sequence(const EnsembleState& state, int q, int samples = kSequencePhaseSamples);

/// Rotation that takes |alpha_+> to |0> and |alpha_-> to |1> (up to phase)
/// before the P_z sequence. Uses R_-y(pi/2) for alpha = 0 and R_y(pi/2) for
/// alpha = pi; with allow_general_angle any alpha uses R_-y(pi/2) R_z(-alpha).
std::vector<QOperator> measurement_prerotation(int q, double alpha, bool allow_general_angle = false);

/// Pre-rotation followed by P_z. Outcome s ends up labeled by |s><s|_q.
/// Supported without the extension flag: q = 1 with alpha in {0, pi},
/// q = 2 with alpha = 0.
EnsembleState mimic_measurement(const EnsembleState& state, int q, double alpha,
                                bool allow_general_angle = false);

/// Feed-forward corrections as gates conditioned on the qubit-1/qubit-2 labels:
/// sigma_x^(3) when qubit 2 reads A, sigma_z^(3) when qubit 1 reads B, and
/// sigma_z^(4) when qubit 1 reads 1.
EnsembleState conditional_feed_forward(const EnsembleState& state, const mbqc::FeedForwardRule& rule);

/// The three conditional gates, in application order.
std::vector<QOperator> conditional_feed_forward_gates(const mbqc::FeedForwardRule& rule);

}  // namespace owqc::nmr
