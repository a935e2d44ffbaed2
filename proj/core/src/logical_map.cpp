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

#include "owqc/mbqc/logical_map.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "owqc/mbqc/graph.hpp"

namespace owqc::mbqc {

QOperator extract_logical_map(double alpha1, double alpha2, int s1, int s2, AnglePolicy policy) {
    if ((s1 != 0 && s1 != 1) || (s2 != 0 && s2 != 1)) {
        throw std::invalid_argument("extract_logical_map: outcomes must be bits");
    }
    const double effective_alpha2 = (policy == AnglePolicy::adaptive && s1 == 1) ? -alpha2 : alpha2;
    const QOperator entangler = build_entangler(Graph::star());
    const Vector bra1 = StateVector::xy_plane(alpha1, s1).amplitudes().conjugate();
    const Vector bra2 = StateVector::xy_plane(effective_alpha2, s2).amplitudes().conjugate();

    Matrix map(4, 4);
    double column_norm = 0.0;
    for (int t = 0; t < 2; ++t) {
        for (int c = 0; c < 2; ++c) {
            const std::array<StateVector, 4> inputs{StateVector::basis(1, static_cast<std::size_t>(t)),
                                                    StateVector::plus(), StateVector::plus(),
                                                    StateVector::basis(1, static_cast<std::size_t>(c))};
            const Vector entangled = apply_unitary(StateVector::product(inputs), entangler).amplitudes();
            // Contract qubits 1 and 2 (the top two bits) with the outcome bras.
            Vector remaining = Vector::Zero(4);
            for (Eigen::Index q1 = 0; q1 < 2; ++q1) {
                for (Eigen::Index q2 = 0; q2 < 2; ++q2) {
                    remaining += bra1(q1) * bra2(q2) * entangled.segment(8 * q1 + 4 * q2, 4);
                }
            }
            const double norm = remaining.norm();
            if (norm <= 1e-12) {
                throw std::domain_error("extract_logical_map: branch (" + std::to_string(s1) + "," +
                                        std::to_string(s2) + ") has zero probability for input |" +
                                        std::to_string(t) + std::to_string(c) + ">");
            }
            if (column_norm == 0.0) column_norm = norm;
            map.col(2 * t + c) = remaining;
        }
    }
    return QOperator(map / column_norm, {1, 2});
}

QOperator corrected_logical_map(const QOperator& map, const FeedForwardRule& rule, int s1, int s2) {
    return QOperator(kron(rule.ff3(s1, s2), rule.ff4(s1)) * map.matrix(), map.qubits());
}

}  // namespace owqc::mbqc
