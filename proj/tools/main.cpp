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

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "owqc_app/report.hpp"

int main(int argc, char** argv) {
    using namespace owqc::app;

    CLI::App cli{"owqc: one-way Deutsch-Jozsa simulator with an NMR ensemble model"};
    RunConfig cfg;
    std::string mode = "dj-projective";
    double budget = -1.0;

    cli.add_option("--mode", mode, "graph-state | dj-projective | dj-ensemble | tomography | metrics | spectrum | verify")
        ->capture_default_str()
        ->check(CLI::IsMember({"graph-state", "dj-projective", "dj-ensemble", "tomography", "metrics", "spectrum",
                               "verify"}));
    cli.add_option("--oracle", cfg.oracle, "f1 | f2 | f3 | f4 | all")
        ->capture_default_str()
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4", "all"}));
    cli.add_option("--branch", cfg.branch, "Measurement branch for dj-projective: all | random | s1s2 (e.g. 01)")
        ->capture_default_str();
    cli.add_option("--seed", cfg.seed, "Seed for random branches, tomography noise and verify inputs")
        ->capture_default_str();
    cli.add_option("--epsilon", cfg.epsilon, "Pseudopure polarization in (0, 1]")->capture_default_str();
    cli.add_option("--noise", cfg.noise, "Gaussian sigma added to tomography Pauli expectations")
        ->capture_default_str();
    cli.add_option("--spec", cfg.spec_path, "Molecule spec file (default: built-in crotonic acid)");
    cli.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    cli.add_option("--time-budget", budget, "GHZ preparation time in seconds charged to relaxation (default: none)");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Report report;
    try {
        cfg.mode = parse_mode(mode);
        if (budget >= 0.0) cfg.time_budget_s = budget;
        validate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "owqc: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        report = run_command(cfg);
    } catch (const std::exception& e) {
        std::cerr << "owqc: " << e.what() << "\n";
        return kExitRuntime;
    }
    try {
        for (const std::string& name : emit_report(report, cfg.out_dir)) std::cout << cfg.out_dir << "/" << name << "\n";
    } catch (const std::exception& e) {
        std::cerr << "owqc: " << e.what() << "\n";
        return kExitIo;
    }
    if (report.exit_code != kExitOk) std::cerr << "owqc: verify reported failures\n";
    return report.exit_code;
}
