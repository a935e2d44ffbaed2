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

#include "owqc/nmr/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "owqc/nmr/ensemble.hpp"

namespace owqc::nmr {
namespace {

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("metrics: dimension mismatch");
    // Tr(AB) = sum_ij A_ij B_ji
    return (a.matrix().cwiseProduct(b.matrix().transpose())).sum().real();
}

}  // namespace

double correlation_attenuated(const DensityMatrix& rho_id, const DensityMatrix& rho_exp) {
    return trace_product(rho_id, rho_exp) / std::sqrt(trace_product(rho_id, rho_id));
}

double fidelity_normalized(const DensityMatrix& rho_id, const DensityMatrix& rho_exp) {
    const double exp_sq = trace_product(rho_exp, rho_exp);
    if (exp_sq <= 0.0) throw std::domain_error("fidelity_normalized: rho_exp is zero");
    return trace_product(rho_id, rho_exp) / std::sqrt(trace_product(rho_id, rho_id) * exp_sq);
}

DensityMatrix pure_equivalent(const DensityMatrix& rho, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("pure_equivalent: epsilon must lie in (0, 1]");
    const double d = static_cast<double>(rho.dim());
    Matrix m = rho.matrix();
    m.diagonal().array() -= (1.0 - epsilon) * rho.trace() / d;
    return DensityMatrix(rho.num_qubits(), m / epsilon, DensityKind::deviation);
}

double witness_value(const DensityMatrix& rho, const StateVector& ghz) {
    return 0.5 * rho.trace() - overlap(rho, ghz);
}

double witness_value(const DensityMatrix& rho) {
    if (rho.num_qubits() != 4) throw std::invalid_argument("witness_value: needs a 4-qubit state");
    return witness_value(rho, target_ghz_state());
}

}  // namespace owqc::nmr
