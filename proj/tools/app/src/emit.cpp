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

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "owqc_app/report.hpp"

namespace owqc::app {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::vector<std::string> emit_report(const Report& report, const std::string& dir) {
    const std::filesystem::path root(dir);
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) throw std::runtime_error("cannot create directory " + root.string() + ": " + ec.message());

    std::vector<std::string> manifest;
    for (const Artifact& a : report.artifacts) {
        write_file(root / a.name, a.content);
        manifest.push_back(a.name);
    }
    write_file(root / "report.json", report.document.dump(2) + "\n");
    manifest.push_back("report.json");
    return manifest;
}

}  // namespace owqc::app
