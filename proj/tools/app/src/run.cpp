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

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "owqc/mbqc/graph.hpp"
#include "owqc/mbqc/measurement.hpp"
#include "owqc/nmr/ensemble.hpp"
#include "owqc/nmr/gradient.hpp"
#include "owqc/nmr/metrics.hpp"
#include "owqc/nmr/molecule_io.hpp"
#include "owqc/nmr/pipeline.hpp"
#include "owqc/nmr/spectrum.hpp"
#include "owqc/nmr/tomography.hpp"
#include "owqc/verify.hpp"
#include "owqc_app/report.hpp"

#ifndef OWQC_VERSION
#define OWQC_VERSION "unknown"
#endif

namespace owqc::app {
namespace {

using nlohmann::ordered_json;

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

ordered_json config_echo(const RunConfig& cfg) {
    ordered_json c;
    c["mode"] = to_string(cfg.mode);
    c["oracle"] = cfg.oracle;
    c["branch"] = cfg.branch;
    c["seed"] = cfg.seed;
    c["epsilon"] = cfg.epsilon;
    c["noise"] = cfg.noise;
    c["spec"] = cfg.spec_path.empty() ? "builtin:crotonic_acid" : cfg.spec_path;
    c["out"] = cfg.out_dir;
    c["time_budget_s"] = cfg.time_budget_s ? ordered_json(*cfg.time_budget_s) : ordered_json(nullptr);
    return c;
}

struct Context {
    const RunConfig& cfg;
    nmr::MoleculeSpec spec;
    Report& report;
    ordered_json& results;

    void add_grids(const std::string& stem, const DensityMatrix& rho) {
        report.artifacts.push_back({stem + "_real.txt", format_grid(rho.matrix(), false)});
        report.artifacts.push_back({stem + "_imag.txt", format_grid(rho.matrix(), true)});
    }

    nmr::EnsembleState prepared_ghz() const {
        return nmr::gradient_crusher(nmr::prepare_ghz(spec, {cfg.epsilon, cfg.time_budget_s}));
    }
};

ordered_json metric_block(const DensityMatrix& pure_eq) {
    const DensityMatrix ideal = DensityMatrix::from_pure(nmr::target_ghz_state());
    ordered_json m;
    m["c"] = nmr::correlation_attenuated(ideal, pure_eq);
    m["F"] = nmr::fidelity_normalized(ideal, pure_eq);
    m["witness"] = nmr::witness_value(pure_eq);
    return m;
}

void run_graph_state(Context& ctx) {
    const StateVector ideal = mbqc::star_graph_state();
    const StateVector built = mbqc::prepare_graph_state(
        std::vector<StateVector>(4, StateVector::plus()), mbqc::Graph::star());
    ordered_json stab = ordered_json::array();
    int vertex = 1;
    for (const QOperator& k : mbqc::graph_stabilizers(mbqc::Graph::star())) {
        stab.push_back({{"vertex", vertex++}, {"expectation", expectation(built, k)}});
    }
    const nmr::EnsembleState nmr_graph = nmr::ghz_to_graph(ctx.prepared_ghz());
    const DensityMatrix pure_eq = nmr::pure_equivalent(nmr_graph.rho, ctx.cfg.epsilon);

    ctx.results["entangler_fidelity"] = fidelity(built, ideal);
    ctx.results["stabilizers"] = stab;
    ctx.results["nmr_graph_state_overlap"] = overlap(pure_eq, ideal);
    ctx.results["nmr_elapsed_s"] = nmr_graph.elapsed_s;
    ctx.add_grids("graph_state", pure_eq);
}

void run_dj_projective(Context& ctx) {
    mbqc::Rng rng(ctx.cfg.seed);
    const std::optional<mbqc::Branch> fixed = fixed_branch(ctx.cfg);
    ordered_json rows = ordered_json::array();
    for (mbqc::Oracle f : selected_oracles(ctx.cfg)) {
        std::vector<mbqc::DJOutcome> outcomes;
        if (ctx.cfg.branch == "all") {
            for (const mbqc::Branch& b : mbqc::kAllBranches) outcomes.push_back(mbqc::run_dj(f, b));
        } else if (fixed) {
            outcomes.push_back(mbqc::run_dj(f, *fixed));
        } else {
            outcomes.push_back(mbqc::run_dj(f, std::nullopt, rng));
        }
        for (const mbqc::DJOutcome& out : outcomes) {
            double p = 1.0;
            for (const auto& rec : out.records) p *= rec.probability;
            ordered_json row;
            row["oracle"] = mbqc::to_string(f);
            row["s1"] = out.branch.s1;
            row["s2"] = out.branch.s2;
            row["probability"] = p;
            row["verdict"] = mbqc::to_string(out.verdict);
            row["sx4"] = out.control_qubit_sx;
            rows.push_back(row);
        }
    }
    ctx.results["rows"] = rows;
}

void run_dj_ensemble(Context& ctx) {
    ordered_json rows = ordered_json::array();
    for (mbqc::Oracle f : selected_oracles(ctx.cfg)) {
        const nmr::EnsembleDJResult r = nmr::run_dj_ensemble(f, ctx.spec, {ctx.cfg.epsilon, ctx.cfg.time_budget_s});
        ordered_json row;
        row["oracle"] = mbqc::to_string(f);
        row["verdict"] = mbqc::to_string(r.verdict);
        row["sx4"] = r.control_qubit_sx;
        row["branch_populations"] = r.branch_populations;
        row["control_a"] = r.control_a;
        row["control_b"] = r.control_b;
        row["elapsed_s"] = r.final_state.elapsed_s;
        rows.push_back(row);
        ctx.add_grids("dj_ensemble_" + std::string(mbqc::to_string(f)), r.final_state.rho);
    }
    ctx.results["rows"] = rows;
}

void run_tomography(Context& ctx, bool always_reconstruct) {
    const nmr::EnsembleState ghz = ctx.prepared_ghz();
    DensityMatrix measured = ghz.rho;
    if (always_reconstruct || ctx.cfg.noise > 0.0) {
        measured = nmr::tomography_reconstruct(ghz.rho, {ctx.cfg.noise, ctx.cfg.seed});
        ctx.results["reconstruction_max_abs_error"] = max_abs_diff(measured.matrix(), ghz.rho.matrix());
        ctx.results["reconstruction_trace"] = measured.trace();
    }
    const DensityMatrix pure_eq = nmr::pure_equivalent(measured, ctx.cfg.epsilon);
    ctx.results["elapsed_s"] = ghz.elapsed_s;
    ctx.results["metrics"] = metric_block(pure_eq);
    ctx.add_grids("rho", pure_eq);
}

void run_spectrum(Context& ctx) {
    ordered_json meta = ordered_json::array();
    const nmr::SpectrumOptions opts;
    for (mbqc::Oracle f : selected_oracles(ctx.cfg)) {
        const nmr::EnsembleDJResult r = nmr::run_dj_ensemble(f, ctx.spec, {ctx.cfg.epsilon, ctx.cfg.time_budget_s});
        const nmr::SpectrumData data = nmr::synthesize_spectrum(r.final_state, ctx.spec, 4, opts);
        std::string text;
        text.reserve(data.samples * 42);
        for (std::size_t i = 0; i < data.samples; ++i) {
            text += format_number(data.frequencies_hz[i]);
            text += ' ';
            text += format_number(data.amplitudes[i].real());
            text += '\n';
        }
        const std::string name = "spectrum_" + std::string(mbqc::to_string(f)) + ".txt";
        ctx.report.artifacts.push_back({name, std::move(text)});

        ordered_json lines = ordered_json::array();
        for (const nmr::SpectralLine& l : nmr::find_lines(data)) {
            lines.push_back({{"frequency_hz", l.frequency_hz}, {"amplitude", l.amplitude}});
        }
        ordered_json entry;
        entry["oracle"] = mbqc::to_string(f);
        entry["file"] = name;
        entry["columns"] = {"frequency_hz", "real_amplitude"};
        entry["observe_qubit"] = data.observe_qubit;
        entry["duration_s"] = data.duration_s;
        entry["samples"] = data.samples;
        entry["reference_phase"] = nmr::to_string(data.reference_phase);
        entry["verdict"] = mbqc::to_string(r.verdict);
        entry["lines"] = lines;
        meta.push_back(entry);
    }
    ctx.report.artifacts.push_back({"spectrum_meta.json", meta.dump(2) + "\n"});
    ctx.results["spectra"] = meta;
}

int module_code(const std::string& module) {
    if (module == "qcore") return 1;
    if (module == "mbqc") return 2;
    return 3;
}

void run_verify(Context& ctx) {
    ordered_json checks = ordered_json::array();
    int failed = 0;
    for (const verify::CheckResult& r : verify::run_invariant_suite(ctx.spec, ctx.cfg.seed)) {
        ordered_json row;
        row["module"] = r.module;
        row["name"] = r.name;
        row["passed"] = r.passed;
        row["worst"] = r.worst;
        row["tolerance"] = r.tolerance;
        if (!r.detail.empty()) row["detail"] = r.detail;
        checks.push_back(row);
        if (!r.passed) {
            if (failed++ == 0) ctx.report.exit_code = kExitVerifyBase + module_code(r.module);
        }
    }
    ctx.results["checks"] = checks;
    ctx.results["passed"] = static_cast<int>(checks.size()) - failed;
    ctx.results["failed"] = failed;
}

}  // namespace

std::string format_grid(const Matrix& m, bool imaginary) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += format_number(imaginary ? m(r, c).imag() : m(r, c).real());
        }
        out += '\n';
    }
    return out;
}

Report run_command(const RunConfig& cfg) {
    validate(cfg);
    Report report;
    ordered_json& doc = report.document;
    doc["tool"] = "owqc";
    doc["version"] = OWQC_VERSION;
    doc["config"] = config_echo(cfg);

    nmr::MoleculeSpec spec =
        cfg.spec_path.empty() ? nmr::MoleculeSpec::crotonic_acid() : nmr::load_molecule_spec(cfg.spec_path);
    ordered_json warnings = ordered_json::array();
    if (spec.relaxation_defaulted()) {
        warnings.push_back("relaxation section missing: T1 = T2 = infinity assumed");
    }
    doc["warnings"] = warnings;
    doc["results"] = ordered_json::object();

    Context ctx{cfg, std::move(spec), report, doc["results"]};
    switch (cfg.mode) {
        case Mode::graph_state: run_graph_state(ctx); break;
        case Mode::dj_projective: run_dj_projective(ctx); break;
        case Mode::dj_ensemble: run_dj_ensemble(ctx); break;
        case Mode::tomography: run_tomography(ctx, true); break;
        case Mode::metrics: run_tomography(ctx, false); break;
        case Mode::spectrum: run_spectrum(ctx); break;
        case Mode::verify: run_verify(ctx); break;
    }

    ordered_json files = ordered_json::array();
    for (const Artifact& a : report.artifacts) files.push_back(a.name);
    files.push_back("report.json");
    doc["files"] = files;
    doc["exit_code"] = report.exit_code;
    return report;
}

}  // namespace owqc::app
