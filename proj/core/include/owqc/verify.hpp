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

#include "owqc/nmr/molecule.hpp"

namespace owqc::verify {

struct CheckResult {
    std::string module;  // qcore, mbqc, nmr
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest deviation observed
    double tolerance = 0.0;  // pass threshold on `worst`
    std::string detail;
};

/// Runs every module invariant on seeded random inputs and exhaustive case
/// sweeps. Results come back in a fixed order.
std::vector<CheckResult> run_invariant_suite(const nmr::MoleculeSpec& spec, std::uint64_t seed);

}  // namespace owqc::verify
