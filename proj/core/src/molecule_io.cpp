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

#include "owqc/nmr/molecule_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace owqc::nmr {
namespace {

enum class Section { none, shifts, jcouplings, relaxation, qubit_map };

struct RawRow {
    int line;
    std::vector<std::string> fields;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(int line, const std::string& msg) const { throw ParseError(source_, line, msg); }

    double number(const std::string& tok, int line) const {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            fail(line, "expected a number, got '" + tok + "'");
        }
        if (used != tok.size()) fail(line, "expected a number, got '" + tok + "'");
        return v;
    }

    MoleculeSpec parse(std::istream& in) {
        std::map<Section, std::vector<RawRow>> rows;
        std::map<Section, int> seen;
        Section current = Section::none;
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string text = raw.substr(0, raw.find('#'));
            text = trim(text);
            if (text.empty()) continue;
            if (text.front() == '[') {
                if (text.back() != ']') fail(line_no, "unterminated section header");
                const std::string name = trim(text.substr(1, text.size() - 2));
                if (name == "shifts") current = Section::shifts;
                else if (name == "jcouplings") current = Section::jcouplings;
                else if (name == "relaxation") current = Section::relaxation;
                else if (name == "qubit_map") current = Section::qubit_map;
                else fail(line_no, "unknown section [" + name + "]");
                if (seen.count(current) != 0) fail(line_no, "duplicate section [" + name + "]");
                seen[current] = line_no;
                continue;
            }
            if (current == Section::none) fail(line_no, "data before the first section header");
            rows[current].push_back({line_no, split_fields(text)});
        }
        if (seen.count(Section::shifts) == 0) fail(line_no, "missing [shifts] section");

        std::vector<Nucleus> nuclei;
        std::map<std::string, std::size_t> index;
        for (const RawRow& r : rows[Section::shifts]) {
            if (r.fields.size() != 2) fail(r.line, "[shifts] rows are '<nucleus> <offset Hz>'");
            if (index.count(r.fields[0]) != 0) fail(r.line, "nucleus '" + r.fields[0] + "' listed twice");
            index[r.fields[0]] = nuclei.size();
            nuclei.push_back({r.fields[0], number(r.fields[1], r.line), 0.0, 0.0});
        }
        const std::size_t n = nuclei.size();
        if (n == 0) fail(seen[Section::shifts], "[shifts] lists no nuclei");

        auto lookup = [&](const std::string& label, int line) {
            const auto it = index.find(label);
            if (it == index.end()) fail(line, "unknown nucleus '" + label + "'");
            return it->second;
        };

        std::vector<std::vector<std::optional<double>>> given(n, std::vector<std::optional<double>>(n));
        for (const RawRow& r : rows[Section::jcouplings]) {
            const std::size_t row = lookup(r.fields.at(0), r.line);
            const std::size_t count = r.fields.size() - 1;
            if (count != row && count != n) {
                fail(r.line, "row " + r.fields[0] + " needs " + std::to_string(row) +
                                 " values (lower triangle) or " + std::to_string(n) + " (full row)");
            }
            for (std::size_t k = 0; k < count; ++k) {
                if (k == row) continue;  // full rows carry the shift on the diagonal
                given[row][k] = number(r.fields[k + 1], r.line);
            }
        }
        std::vector<std::vector<double>> j(n, std::vector<double>(n, 0.0));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (given[a][b]) j[a][b] = *given[a][b];
                else if (given[b][a]) j[a][b] = *given[b][a];
            }
        }

        const bool defaulted = seen.count(Section::relaxation) == 0;
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<bool> relaxed(n, defaulted);
        for (Nucleus& nuc : nuclei) nuc.t1_s = nuc.t2_s = inf;
        for (const RawRow& r : rows[Section::relaxation]) {
            if (r.fields.size() != 3) fail(r.line, "[relaxation] rows are '<nucleus> <T1 s> <T2 s>'");
            const std::size_t idx = lookup(r.fields[0], r.line);
            nuclei[idx].t1_s = number(r.fields[1], r.line);
            nuclei[idx].t2_s = number(r.fields[2], r.line);
            relaxed[idx] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!relaxed[i]) fail(seen[Section::relaxation], "no relaxation times for " + nuclei[i].label);
        }

        std::vector<int> qubit_map(n, -1);
        if (seen.count(Section::qubit_map) == 0) {
            for (std::size_t i = 0; i < n; ++i) qubit_map[i] = static_cast<int>(i);
        } else {
            for (const RawRow& r : rows[Section::qubit_map]) {
                if (r.fields.size() != 2) fail(r.line, "[qubit_map] rows are '<qubit> <nucleus>'");
                const double q = number(r.fields[0], r.line);
                if (q != std::floor(q) || q < 1 || q > static_cast<double>(n)) {
                    fail(r.line, "qubit index must be an integer in 1.." + std::to_string(n));
                }
                auto& slot = qubit_map[static_cast<std::size_t>(q) - 1];
                if (slot != -1) fail(r.line, "qubit " + r.fields[0] + " mapped twice");
                slot = static_cast<int>(lookup(r.fields[1], r.line));
            }
            for (std::size_t q = 0; q < n; ++q) {
                if (qubit_map[q] == -1) fail(seen[Section::qubit_map], "qubit " + std::to_string(q + 1) + " unmapped");
            }
        }
        return MoleculeSpec(std::move(nuclei), std::move(j), std::move(qubit_map), defaulted);
    }

private:
    std::string source_;
};

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

MoleculeSpec parse_molecule_spec(std::istream& in, const std::string& source_name) {
    return Parser(source_name).parse(in);
}

MoleculeSpec load_molecule_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open molecule file " + path.string());
    return parse_molecule_spec(in, path.string());
}

}  // namespace owqc::nmr
