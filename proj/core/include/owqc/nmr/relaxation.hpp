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

#include "owqc/nmr/ensemble.hpp"

namespace owqc::nmr {

/// Kraus operators of one spin relaxing for t seconds: amplitude damping
/// toward |0> at rate 1/T1 followed by pure dephasing at rate
/// 1/T2 - 1/(2 T1). Coherences decay as exp(-t/T2) overall.
/// Throws std::invalid_argument if T2 > 2 T1 or t < 0.
std::array<Matrix, 4> relaxation_kraus(double t1, double t2, double t);

/// Choi matrix sum_ij |i><j| (x) E(|i><j|) of the single-spin channel.
Matrix relaxation_choi(double t1, double t2, double t);

/// Independent per-spin relaxation across the register.
EnsembleState relaxation_channel(const EnsembleState& state, const MoleculeSpec& spec, double t);

}  // namespace owqc::nmr
