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

#include "owqc/nmr/tomography.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace owqc::nmr {
namespace {

/// P|x> = phase(x) |x ^ flip> for a Pauli string.
struct PauliAction {
    std::size_t flip = 0;
    std::size_t y_mask = 0;
    std::size_t z_mask = 0;
    int y_count = 0;

    cplx phase(std::size_t x) const {
        // Y|b> = i (-1)^b |1-b>, Z|b> = (-1)^b |b>
        const int sign_bits = std::popcount(x & (y_mask | z_mask));
        cplx p = (sign_bits % 2 == 0) ? cplx{1.0} : cplx{-1.0};
        static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return p * kPowers[y_count % 4];
    }
};

PauliAction action_of(std::size_t index, int n) {
    PauliAction a;
    for (int q = 1; q <= n; ++q) {
        const std::size_t digit = (index >> (2 * (n - q))) & 3U;
        const std::size_t bit = std::size_t{1} << (n - q);
        if (digit == 1 || digit == 2) a.flip |= bit;
        if (digit == 2) {
            a.y_mask |= bit;
            ++a.y_count;
        }
        if (digit == 3) a.z_mask |= bit;
    }
    return a;
}

}  // namespace

std::string pauli_label(std::size_t index, int num_qubits) {
    static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    for (int q = 1; q <= num_qubits; ++q) out.push_back(kNames[(index >> (2 * (num_qubits - q))) & 3U]);
    return out;
}

std::vector<double> pauli_expectations(const DensityMatrix& rho) {
    const int n = rho.num_qubits();
    const std::size_t d = dim_of(n);
    std::vector<double> out(d * d);
    for (std::size_t p = 0; p < out.size(); ++p) {
        const PauliAction a = action_of(p, n);
        cplx sum{0.0, 0.0};
        // P|x> = phase(x)|x ^ flip>, so <x|rho P|x> = phase(x) rho(x, x ^ flip).
        for (std::size_t x = 0; x < d; ++x) sum += a.phase(x) * rho(x, x ^ a.flip);
        out[p] = sum.real();
    }
    return out;
}

DensityMatrix reconstruct_from_paulis(const std::vector<double>& expectations, int num_qubits, DensityKind kind) {
    const std::size_t d = dim_of(num_qubits);
    if (expectations.size() != d * d) throw std::invalid_argument("reconstruct_from_paulis: need 4^n expectations");
    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t p = 0; p < expectations.size(); ++p) {
        if (expectations[p] == 0.0) continue;
        const PauliAction a = action_of(p, num_qubits);
        for (std::size_t x = 0; x < d; ++x) {
            rho(static_cast<Eigen::Index>(x ^ a.flip), static_cast<Eigen::Index>(x)) += expectations[p] * a.phase(x);
        }
    }
    rho /= static_cast<double>(d);
    return DensityMatrix(num_qubits, (rho + rho.adjoint()) * 0.5, kind);
}

DensityMatrix tomography_reconstruct(const DensityMatrix& rho, const TomographyOptions& options) {
    if (options.noise_sigma < 0.0) throw std::invalid_argument("tomography: negative noise level");
    std::vector<double> expectations = pauli_expectations(rho);
    if (options.noise_sigma > 0.0) {
        std::mt19937_64 rng(options.seed);
        std::normal_distribution<double> noise(0.0, options.noise_sigma);
        for (std::size_t p = 1; p < expectations.size(); ++p) expectations[p] += noise(rng);
    }
    return reconstruct_from_paulis(expectations, rho.num_qubits(), rho.kind());
}

}  // namespace owqc::nmr
