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
#include <optional>
#include <string>
#include <string_view>

#include <vector>

#include "owqc/mbqc/dj.hpp"
#include "owqc/mbqc/measurement.hpp"

namespace owqc::app {

enum class Mode { graph_state, dj_projective, dj_ensemble, tomography, metrics, spectrum, verify };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct RunConfig {
    Mode mode = Mode::dj_projective;
    std::string oracle = "all";  // f1..f4 or "all"
    std::string branch = "all";  // "all", "random", or two bits "s1s2"
    std::uint64_t seed = mbqc::kDefaultSeed;
    double epsilon = 1.0;
    double noise = 0.0;
    std::string spec_path;  // empty selects the built-in crotonic acid
    std::string out_dir = "owqc_out";
    std::optional<double> time_budget_s;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& cfg);

std::vector<mbqc::Oracle> selected_oracles(const RunConfig& cfg);

/// nullopt means "enumerate all branches".
std::optional<mbqc::Branch> fixed_branch(const RunConfig& cfg);

}  // namespace owqc::app
