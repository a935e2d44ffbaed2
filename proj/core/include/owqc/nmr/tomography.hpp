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

#include <cstdint>
#include <string>
#include <vector>

#include "owqc/state.hpp"

namespace owqc::nmr {

/// Pauli strings are indexed in base 4 with qubit 1 as the most significant
/// digit; digit 0..3 = I, X, Y, Z.
std::string pauli_label(std::size_t index, int num_qubits);

/// Tr(rho P) for all 4^n Pauli strings.
std::vector<double> pauli_expectations(const DensityMatrix& rho);

/// rho = 2^-n sum_P <P> P. The result has the kind of `kind`.
DensityMatrix reconstruct_from_paulis(const std::vector<double>& expectations, int num_qubits,
                                      DensityKind kind = DensityKind::physical);

struct TomographyOptions {
    /// Standard deviation of i.i.d. Gaussian noise added to every
    /// non-identity expectation. <I..I> is left exact.
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Idealized full Pauli tomography of a simulated state.
DensityMatrix tomography_reconstruct(const DensityMatrix& rho, const TomographyOptions& options = {});

}  // namespace owqc::nmr
