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

#include "owqc_app/config.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace owqc::app {
namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 7> kModeNames{{
    {Mode::graph_state, "graph-state"},
    {Mode::dj_projective, "dj-projective"},
    {Mode::dj_ensemble, "dj-ensemble"},
    {Mode::tomography, "tomography"},
    {Mode::metrics, "metrics"},
    {Mode::spectrum, "spectrum"},
    {Mode::verify, "verify"},
}};

}  // namespace

std::string_view to_string(Mode mode) {
    for (const auto& [m, name] : kModeNames) {
        if (m == mode) return name;
    }
    return "unknown";
}

Mode parse_mode(std::string_view text) {
    for (const auto& [m, name] : kModeNames) {
        if (name == text) return m;
    }
    throw std::invalid_argument("mode: unknown value '" + std::string(text) + "'");
}

void validate(const RunConfig& cfg) {
    if (cfg.oracle != "all") mbqc::parse_oracle(cfg.oracle);
    if (cfg.branch != "all" && cfg.branch != "random") fixed_branch(cfg);
    if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) throw std::invalid_argument("epsilon: must lie in (0, 1]");
    if (cfg.noise < 0.0) throw std::invalid_argument("noise: must be non-negative");
    if (cfg.time_budget_s && *cfg.time_budget_s < 0.0) {
        throw std::invalid_argument("time-budget: must be non-negative");
    }
    if (cfg.out_dir.empty()) throw std::invalid_argument("out: empty directory");
}

std::vector<mbqc::Oracle> selected_oracles(const RunConfig& cfg) {
    if (cfg.oracle == "all") return {mbqc::kAllOracles.begin(), mbqc::kAllOracles.end()};
    return {mbqc::parse_oracle(cfg.oracle)};
}

std::optional<mbqc::Branch> fixed_branch(const RunConfig& cfg) {
    if (cfg.branch == "all" || cfg.branch == "random") return std::nullopt;
    const std::string& b = cfg.branch;
    auto bit = [&](char c) {
        if (c != '0' && c != '1') throw std::invalid_argument("branch: expected all, random, or two bits, got '" + b + "'");
        return c - '0';
    };
    if (b.size() != 2) throw std::invalid_argument("branch: expected all, random, or two bits, got '" + b + "'");
    return mbqc::Branch{bit(b[0]), bit(b[1])};
}

}  // namespace owqc::app
