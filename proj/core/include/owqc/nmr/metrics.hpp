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

#include "owqc/state.hpp"

namespace owqc::nmr {

/// c = Tr(rho_id rho_exp) / sqrt(Tr(rho_id^2)). Sensitive to overall
/// magnetization loss.
double correlation_attenuated(const DensityMatrix& rho_id, const DensityMatrix& rho_exp);

/// F = Tr(rho_id rho_exp) / sqrt(Tr(rho_id^2) Tr(rho_exp^2)). Invariant under
/// rescaling rho_exp. Throws std::domain_error if rho_exp is zero.
double fidelity_normalized(const DensityMatrix& rho_id, const DensityMatrix& rho_exp);

/// (rho - (1 - epsilon) Tr(rho) I / 2^n) / epsilon: removes the identity
/// background of a pseudopure preparation. Identity map at epsilon = 1.
DensityMatrix pure_equivalent(const DensityMatrix& rho, double epsilon);

/// Tr(W rho) with W = I/2 - |GHZ><GHZ| for the given GHZ ket.
double witness_value(const DensityMatrix& rho, const StateVector& ghz);
/// Same, for the prepared GHZ state (|0110> + |1001>)/sqrt(2).
double witness_value(const DensityMatrix& rho);

}  // namespace owqc::nmr
