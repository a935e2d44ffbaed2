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

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "owqc/nmr/molecule.hpp"

namespace owqc::nmr {

/// Malformed molecule file. what() reads "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the sectioned text format:
///
///   [shifts]        <nucleus> <offset Hz>
///   [jcouplings]    <nucleus> <J to earlier nuclei ...>   (lower triangle)
///                   or <nucleus> <n values>               (full row; diagonal ignored)
///   [relaxation]    <nucleus> <T1 s> <T2 s>
///   [qubit_map]     <qubit> <nucleus>
///
/// '#' starts a comment. [shifts] is required; a missing [relaxation] gives
/// T1 = T2 = inf and sets relaxation_defaulted(); a missing [qubit_map] maps
/// qubits to nuclei in [shifts] order. Validation failures from MoleculeSpec
/// propagate as std::invalid_argument.
MoleculeSpec parse_molecule_spec(std::istream& in, const std::string& source_name = "<input>");

MoleculeSpec load_molecule_spec(const std::filesystem::path& path);

}  // namespace owqc::nmr
