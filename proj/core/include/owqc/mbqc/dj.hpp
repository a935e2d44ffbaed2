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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owqc/mbqc/measurement.hpp"
#include "owqc/ops.hpp"

namespace owqc::mbqc {

/// One-bit functions: f1(x)=0, f2(x)=1 (constant); f3(x)=x, f4(x)=1^x (balanced).
enum class Oracle { f1 = 1, f2 = 2, f3 = 3, f4 = 4 };

inline constexpr std::array<Oracle, 4> kAllOracles{Oracle::f1, Oracle::f2, Oracle::f3, Oracle::f4};

std::string_view to_string(Oracle f);
/// Accepts "f1".."f4"; throws std::invalid_argument otherwise.
Oracle parse_oracle(std::string_view text);
int oracle_value(Oracle f, int x);
bool is_constant(Oracle f);

enum class Verdict { constant, balanced };
std::string_view to_string(Verdict v);

struct Branch {
    int s1 = 0;
    int s2 = 0;
    friend bool operator==(const Branch&, const Branch&) = default;
};

inline constexpr std::array<Branch, 4> kAllBranches{Branch{0, 0}, Branch{0, 1}, Branch{1, 0}, Branch{1, 1}};

/// Measurement angles and feed-forward for one oracle:
///   FF(3) = sigma_z^(z_s1 * s1 + z_offset) sigma_x^(x_s2 * s2 + x_offset)
///   FF(4) = sigma_z^(s1)
/// with exponents taken mod 2.
struct FeedForwardRule {
    Oracle oracle = Oracle::f1;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    int z_s1 = 1;
    int z_offset = 0;
    int x_s2 = 1;
    int x_offset = 0;

    static FeedForwardRule for_oracle(Oracle f);

    int z3_exponent(int s1) const { return (z_s1 * s1 + z_offset) % 2; }
    int x3_exponent(int s2) const { return (x_s2 * s2 + x_offset) % 2; }
    int z4_exponent(int s1) const { return s1 % 2; }

    Matrix ff3(int s1, int s2) const;
    Matrix ff4(int s1) const;

    /// Control polarities of the conditional gates in the ensemble network:
    /// sigma_x on qubit 3 fires when qubit 2 reads A, the extra sigma_z on
    /// qubit 3 fires when qubit 1 reads B.
    int control_a() const { return 1 - x_offset; }
    int control_b() const { return 1 - z_offset; }
};

/// Applies FF(3) to physical qubit 3 and FF(4) to physical qubit 4.
StateVector feed_forward(const StateVector& state, const FeedForwardRule& rule, int s1, int s2);

/// sigma_z on the target, then |x>_c|y>_t -> |x>_c|y ^ f(x)>_t, on
/// (control, target).
QOperator oracle_unitary(Oracle f, int control = 1, int target = 2);

/// Circuit-model reference: <sigma_x> of the control after the oracle acts
/// on |+>_c|+>_t.
double dj_circuit_readout(Oracle f);

struct DJOutcome {
    Oracle oracle = Oracle::f1;
    Branch branch;
    Verdict verdict = Verdict::constant;
    double control_qubit_sx = 0.0;  // <sigma_x> on physical qubit 4
    std::vector<MeasurementRecord> records;
    StateVector final_state = StateVector::basis(4, 0);
};

/// Graph state, the per-oracle measurements on qubits 1 and 2, feed-forward, and
/// the qubit-4 readout. A forced branch is used when given; otherwise the
/// outcomes are sampled from rng.
DJOutcome run_dj(Oracle f, std::optional<Branch> branch, Rng& rng);
DJOutcome run_dj(Oracle f, Branch branch);

}  // namespace owqc::mbqc
