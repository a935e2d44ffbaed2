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

#include "owqc/mbqc/dj.hpp"
#include "owqc/ops.hpp"

namespace owqc::mbqc {

enum class AnglePolicy {
    fixed,     // qubit 2 is measured at alpha2 regardless of s1
    adaptive,  // qubit 2 is measured at (-1)^s1 alpha2
};

/// Effective two-qubit map realized on the star graph.
///
/// Logical inputs are (target on physical qubit 1, control on physical qubit
/// 4); outputs are (target on physical qubit 3, control on physical qubit 4).
/// The map is assembled column by column from the four computational-basis
/// inputs: entangle |t>_1|+>_2|+>_3|c>_4, project qubits 1 and 2 onto the
/// outcome kets, and read the amplitudes left on qubits 3 and 4. The result is
/// rescaled by the common column norm so that it is unitary up to phase; the
/// returned operator is labeled on logical qubits {1 = target, 2 = control}.
///
/// Throws std::domain_error naming the input if a column has zero weight.
QOperator extract_logical_map(double alpha1, double alpha2, int s1, int s2,
                              AnglePolicy policy = AnglePolicy::fixed);

/// (FF(3) (x) FF(4)) * map for the rule's feed-forward at branch (s1, s2).
QOperator corrected_logical_map(const QOperator& map, const FeedForwardRule& rule, int s1, int s2);

}  // namespace owqc::mbqc
