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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace owqc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Hard cap on register size; everything is dense.
inline constexpr int kMaxQubits = 10;

/// Tolerance for exact algebraic identities.
inline constexpr double kExactTol = 1e-10;
/// Tolerance for channel-averaging approximations.
inline constexpr double kChannelTol = 1e-8;

inline std::size_t dim_of(int num_qubits) { return std::size_t{1} << num_qubits; }

/// Largest elementwise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Distance between a and b after removing the best global phase:
/// max_ij |b_ij - e^{i theta} a_ij| with theta = arg(<a, b>_F).
double phase_invariant_distance(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = kExactTol);
bool is_unitary(const Matrix& m, double tol = kExactTol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& hermitian);

/// Kronecker product a (x) b with a on the more significant side.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace owqc
