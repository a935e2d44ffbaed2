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

#include "owqc/nmr/molecule.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace owqc::nmr {
namespace {

constexpr double kSymmetryTol = 1e-9;

std::string fmt(double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

MoleculeSpec::MoleculeSpec(std::vector<Nucleus> nuclei, std::vector<std::vector<double>> couplings_hz,
                           std::vector<int> qubit_map, bool relaxation_defaulted)
    : nuclei_(std::move(nuclei)),
      couplings_hz_(std::move(couplings_hz)),
      qubit_map_(std::move(qubit_map)),
      relaxation_defaulted_(relaxation_defaulted) {
    const std::size_t n = nuclei_.size();
    if (n == 0 || n > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("nuclei: need between 1 and 10 spins");
    }
    if (couplings_hz_.size() != n) throw std::invalid_argument("jcouplings: expected " + std::to_string(n) + " rows");
    for (std::size_t j = 0; j < n; ++j) {
        if (couplings_hz_[j].size() != n) {
            throw std::invalid_argument("jcouplings: row " + nuclei_[j].label + " has wrong length");
        }
        if (couplings_hz_[j][j] != 0.0) {
            throw std::invalid_argument("jcouplings: diagonal entry for " + nuclei_[j].label + " must be zero");
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (std::abs(couplings_hz_[j][k] - couplings_hz_[k][j]) > kSymmetryTol) {
                throw std::invalid_argument("jcouplings: asymmetric pair (" + nuclei_[k].label + "," +
                                            nuclei_[j].label + "): " + fmt(couplings_hz_[k][j]) +
                                            " vs " + fmt(couplings_hz_[j][k]));
            }
        }
    }
    for (const Nucleus& nuc : nuclei_) {
        if (!(nuc.t2_s > 0.0)) throw std::invalid_argument("relaxation: T2 of " + nuc.label + " must be > 0");
        if (nuc.t1_s < nuc.t2_s) throw std::invalid_argument("relaxation: T1 < T2 for " + nuc.label);
    }
    if (qubit_map_.size() != n) throw std::invalid_argument("qubit_map: expected " + std::to_string(n) + " entries");
    std::vector<bool> seen(n, false);
    for (int idx : qubit_map_) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[static_cast<std::size_t>(idx)]) {
            throw std::invalid_argument("qubit_map: not a permutation of the nuclei");
        }
        seen[static_cast<std::size_t>(idx)] = true;
    }
}

MoleculeSpec MoleculeSpec::crotonic_acid() {
    // Nucleus order C1..C4; qubits 1..4 carry C2, C4, C3, C1.
    std::vector<Nucleus> nuclei{
        {"C1", 1200.0, 12.37, 0.3762},
        {"C2", -900.0, 4.89, 0.5067},
        {"C3", 400.0, 4.13, 0.5665},
        {"C4", -1500.0, 4.96, 0.5445},
    };
    std::vector<std::vector<double>> j{
        {0.0, 72.4, 1.4, 7.1},
        {72.4, 0.0, 69.7, 1.6},
        {1.4, 69.7, 0.0, 41.6},
        {7.1, 1.6, 41.6, 0.0},
    };
    return MoleculeSpec(std::move(nuclei), std::move(j), {1, 3, 2, 0});
}

MoleculeSpec MoleculeSpec::uniform(int spins, double shift_hz, double j_hz) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Nucleus> nuclei;
    std::vector<int> map;
    for (int i = 0; i < spins; ++i) {
        nuclei.push_back({"S" + std::to_string(i + 1), shift_hz, inf, inf});
        map.push_back(i);
    }
    std::vector<std::vector<double>> j(static_cast<std::size_t>(spins),
                                       std::vector<double>(static_cast<std::size_t>(spins), j_hz));
    for (int i = 0; i < spins; ++i) j[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    return MoleculeSpec(std::move(nuclei), std::move(j), std::move(map), true);
}

int MoleculeSpec::nucleus_index(int qubit) const {
    if (qubit < 1 || qubit > num_spins()) {
        throw std::out_of_range("MoleculeSpec: qubit " + std::to_string(qubit) + " out of range");
    }
    return qubit_map_[static_cast<std::size_t>(qubit - 1)];
}

const Nucleus& MoleculeSpec::nucleus_on(int qubit) const {
    return nuclei_[static_cast<std::size_t>(nucleus_index(qubit))];
}

double MoleculeSpec::j_hz(int qubit_a, int qubit_b) const {
    return couplings_hz_[static_cast<std::size_t>(nucleus_index(qubit_a))]
                        [static_cast<std::size_t>(nucleus_index(qubit_b))];
}

}  // namespace owqc::nmr
