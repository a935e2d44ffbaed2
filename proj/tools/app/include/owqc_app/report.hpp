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

#include <string>
#include <vector>

#include <json.hpp>

#include "owqc_app/config.hpp"

namespace owqc::app {

/// A file that emit_report will write, relative to the output directory.
struct Artifact {
    std::string name;
    std::string content;
};

struct Report {
    nlohmann::ordered_json document;
    std::vector<Artifact> artifacts;
    /// 0 on success; for verify mode 10 + index of the first failing module
    /// (qcore 1, mbqc 2, nmr 3).
    int exit_code = 0;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitRuntime = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitVerifyBase = 10,
};

Report run_command(const RunConfig& cfg);

/// Writes every artifact plus report.json (which lists them) into `dir`,
/// creating it if needed. Returns the manifest in write order. Throws
/// std::runtime_error naming the path on I/O failure.
std::vector<std::string> emit_report(const Report& report, const std::string& dir);

/// Fixed-format numeric grid, one matrix row per line.
std::string format_grid(const Matrix& m, bool imaginary);

}  // namespace owqc::app
