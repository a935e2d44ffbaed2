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

#include <string>
#include <vector>

#include "owqc/linalg.hpp"

namespace owqc::nmr {

struct Nucleus {
    std::string label;
    double shift_hz = 0.0;  // rotating-frame offset
    double t1_s = 0.0;
    double t2_s = 0.0;
};

/// Homonuclear spin system. Parameters are stored per nucleus; the accessors
/// take 1-based physical qubit indices and go through the qubit map.
class MoleculeSpec {
public:
    /// `couplings_hz` is the full n x n J matrix in nucleus order.
    /// `qubit_map[q - 1]` is the nucleus index carried by physical qubit q.
    /// Throws std::invalid_argument naming the offending field when J is not
    /// symmetric with zero diagonal, T1 >= T2 > 0 fails, or qubit_map is not
    /// a permutation.
    MoleculeSpec(std::vector<Nucleus> nuclei, std::vector<std::vector<double>> couplings_hz,
                 std::vector<int> qubit_map, bool relaxation_defaulted = false);

    /// Crotonic acid, 13C labeled, with C2, C4, C3, C1 on qubits 1..4 and the
    /// measured T1/T2 values. Shifts and couplings are placeholders; the
    /// shipped data/crotonic_acid.mol carries the same numbers.
    static MoleculeSpec crotonic_acid();

    /// n spins with the given offsets and a constant coupling, no relaxation.
    static MoleculeSpec uniform(int spins, double shift_hz = 0.0, double j_hz = 0.0);

    int num_spins() const { return static_cast<int>(nuclei_.size()); }
    const std::vector<Nucleus>& nuclei() const { return nuclei_; }
    const std::vector<std::vector<double>>& couplings_hz() const { return couplings_hz_; }
    const std::vector<int>& qubit_map() const { return qubit_map_; }
    /// True when the source had no relaxation data and T1 = T2 = inf was used.
    bool relaxation_defaulted() const { return relaxation_defaulted_; }

    const Nucleus& nucleus_on(int qubit) const;
    double shift_hz(int qubit) const { return nucleus_on(qubit).shift_hz; }
    /// Angular Larmor offset, 2 pi * shift.
    double omega(int qubit) const { return 2.0 * kPi * shift_hz(qubit); }
    double j_hz(int qubit_a, int qubit_b) const;
    double t1(int qubit) const { return nucleus_on(qubit).t1_s; }
    double t2(int qubit) const { return nucleus_on(qubit).t2_s; }

private:
    int nucleus_index(int qubit) const;

    std::vector<Nucleus> nuclei_;
    std::vector<std::vector<double>> couplings_hz_;
    std::vector<int> qubit_map_;
    bool relaxation_defaulted_ = false;
};

}  // namespace owqc::nmr
