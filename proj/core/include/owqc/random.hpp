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

#include <random>

#include "owqc/ops.hpp"
#include "owqc/state.hpp"

namespace owqc::random {

using Engine = std::mt19937_64;

/// Haar-like random ket from normalized complex Gaussian amplitudes.
StateVector state(int num_qubits, Engine& rng);

/// Random unitary from the QR decomposition of a complex Gaussian matrix.
QOperator unitary(std::vector<int> qubits, Engine& rng);

/// Random full-rank density matrix G G^dagger / Tr(G G^dagger).
DensityMatrix density(int num_qubits, Engine& rng);

/// Random Hermitian matrix with Gaussian entries, wrapped as a deviation.
DensityMatrix hermitian(int num_qubits, Engine& rng);

}  // namespace owqc::random
