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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// gating criterion fails. Tolerances are fixed here and never read from input.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "owqc/mbqc/dj.hpp"
#include "owqc/mbqc/graph.hpp"
#include "owqc/mbqc/logical_map.hpp"
#include "owqc/nmr/ensemble.hpp"
#include "owqc/nmr/gradient.hpp"
#include "owqc/nmr/metrics.hpp"
#include "owqc/nmr/pipeline.hpp"
#include "owqc/nmr/spectrum.hpp"
#include "owqc/nmr/tomography.hpp"
#include "owqc/random.hpp"
#include "owqc/verify.hpp"

using namespace owqc;

namespace {

constexpr double kAnchorTol = 1e-10;
constexpr double kDeterminismTol = 1e-9;
constexpr double kEnsembleTol = 1e-9;
constexpr double kCnotTol = 1e-10;
constexpr double kPzTol = 1e-8;
constexpr double kRefocusTol = 1e-12;
constexpr double kCorrectabilityTol = 1e-10;
constexpr double kGhzTol = 1e-10;
constexpr double kMetricTol = 1e-12;
constexpr double kTomographyTol = 1e-10;
constexpr double kSilentTol = 1e-12;
constexpr double kSuiteSeconds = 60.0;
constexpr double kPrepBudget = 0.085;
constexpr std::array<double, 2> kCorrelationWindow{0.70, 0.90};

struct Line {
    int id;
    const char* title;
    bool gating;
    bool passed;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

nmr::EnsembleState wrap(const DensityMatrix& rho) { return {rho, 0.0}; }

Line graph_anchor() {
    const std::vector<StateVector> a{StateVector::plus(), StateVector::zero(), StateVector::minus(), StateVector::plus()};
    const std::vector<StateVector> b{StateVector::minus(), StateVector::one(), StateVector::plus(), StateVector::minus()};
    const StateVector expected = StateVector::normalized(
        4, StateVector::product(a).amplitudes() + StateVector::product(b).amplitudes());
    const StateVector built =
        mbqc::prepare_graph_state(std::vector<StateVector>(4, StateVector::plus()), mbqc::Graph::star());
    const double dev = std::abs(1.0 - fidelity(built, expected));
    return {1, "graph-state anchor", true, dev <= kAnchorTol, fmt("|1-F|=%.2e tol=%.0e", dev, kAnchorTol)};
}

Line dj_projective() {
    double worst = 0.0;
    int correct = 0;
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        const double expected = mbqc::is_constant(f) ? 1.0 : -1.0;
        for (const mbqc::Branch& br : mbqc::kAllBranches) {
            const mbqc::DJOutcome out = mbqc::run_dj(f, br);
            worst = std::max(worst, std::abs(out.control_qubit_sx - expected));
            correct += out.verdict == (mbqc::is_constant(f) ? mbqc::Verdict::constant : mbqc::Verdict::balanced);
        }
    }
    return {2, "DJ determinism, projective", true, correct == 16 && worst <= kDeterminismTol,
            fmt("verdicts %.0f/16, max|<sx4>-expected|=%.2e tol=%.0e", correct, worst, kDeterminismTol)};
}

Line dj_ensemble() {
    const nmr::MoleculeSpec spec = nmr::MoleculeSpec::crotonic_acid();
    double sx_dev = 0.0;
    double state_dev = 0.0;
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        for (double eps : {1.0, 0.5}) {
            const nmr::EnsembleDJResult r = nmr::run_dj_ensemble(f, spec, {eps, std::nullopt});
            sx_dev = std::max(sx_dev, std::abs(r.control_qubit_sx - (mbqc::is_constant(f) ? eps : -eps)));
            state_dev = std::max(state_dev,
                                 max_abs_diff(r.final_state.rho.matrix(), nmr::projective_branch_average(f, eps).matrix()));
        }
    }
    return {3, "DJ determinism, ensemble", true, sx_dev <= kEnsembleTol && state_dev <= kEnsembleTol,
            fmt("max|<sx4>-(+-eps)|=%.2e, max|rho-branch avg|=%.2e tol=%.0e", sx_dev, state_dev, kEnsembleTol)};
}

Line cnot_identity() {
    const nmr::MoleculeSpec spec = nmr::MoleculeSpec::crotonic_acid();
    double worst = 0.0;
    for (int c = 1; c <= 4; ++c) {
        for (int t = 1; t <= 4; ++t) {
            if (c == t) continue;
            worst = std::max(worst, phase_invariant_distance(embed_operator(gates::cnot(c, t), 4).matrix(),
                                                             embed_operator(nmr::cnot_decomposed(c, t, spec), 4).matrix()));
        }
    }
    return {4, "NMR CNOT decomposition", true, worst < kCnotTol,
            fmt("max phase-invariant distance over 12 ordered pairs=%.2e tol=%.0e", worst, kCnotTol)};
}

Line pz_channels() {
    double channel_dev = 0.0;
    for (int q : {1, 2}) {
        for (std::size_t p = 0; p < 256; ++p) {
            std::vector<double> e(256, 0.0);
            e[p] = 16.0;
            const DensityMatrix basis = nmr::reconstruct_from_paulis(e, 4, DensityKind::deviation);
            channel_dev = std::max(channel_dev, max_abs_diff(nmr::pz_sequence(wrap(basis), q).rho.matrix(),
                                                             dephase_qubit(basis, q).matrix()));
        }
    }
    random::Engine rng(5);
    double refocus_dev = 0.0;
    for (int q : {1, 2}) {
        const DensityMatrix rho = random::density(4, rng);
        const DensityMatrix out = nmr::pz_sequence(wrap(rho), q).rho;
        for (std::size_t r = 0; r < 16; ++r) {
            for (std::size_t c = 0; c < 16; ++c) {
                const std::size_t mask = std::size_t{1} << (4 - q);
                if ((r & mask) == (c & mask)) refocus_dev = std::max(refocus_dev, std::abs(out(r, c) - rho(r, c)));
            }
        }
    }
    return {5, "gradient sequences as dephasing", true, channel_dev < kPzTol && refocus_dev <= kRefocusTol,
            fmt("channel dev=%.2e tol=%.0e, refocused coherence dev=%.2e", channel_dev, kPzTol, refocus_dev)};
}

struct GridScan {
    int failures = 0;
    int comparisons = 0;
    double worst = 0.0;
};

GridScan scan_grid(mbqc::AnglePolicy policy) {
    const mbqc::FeedForwardRule rule = mbqc::FeedForwardRule::for_oracle(mbqc::Oracle::f1);
    GridScan s;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const double a1 = 2.0 * kPi * i / 8.0;
            const double a2 = 2.0 * kPi * j / 8.0;
            const Matrix ref = mbqc::corrected_logical_map(mbqc::extract_logical_map(a1, a2, 0, 0, policy), rule, 0, 0).matrix();
            for (const mbqc::Branch& b : mbqc::kAllBranches) {
                if (b == mbqc::Branch{0, 0}) continue;
                const Matrix m =
                    mbqc::corrected_logical_map(mbqc::extract_logical_map(a1, a2, b.s1, b.s2, policy), rule, b.s1, b.s2)
                        .matrix();
                const double d = phase_invariant_distance(ref, m);
                s.worst = std::max(s.worst, d);
                s.failures += d > kCorrectabilityTol;
                ++s.comparisons;
            }
        }
    }
    return s;
}

Line correctability() {
    const GridScan s = scan_grid(mbqc::AnglePolicy::fixed);
    return {6, "feed-forward correctability, 8x8 angle grid", true, s.failures == 0,
            fmt("%.0f of %.0f branch comparisons off, worst distance=%.3f tol=1e-10", s.failures, s.comparisons, s.worst)};
}

Line correctability_adaptive() {
    const GridScan s = scan_grid(mbqc::AnglePolicy::adaptive);
    return {6, "same grid, second angle sign-adapted to s1", false, s.failures == 0,
            fmt("%.0f of %.0f branch comparisons off, worst distance=%.2e", s.failures, s.comparisons, s.worst)};
}

Line ghz_pipeline() {
    const nmr::MoleculeSpec spec = nmr::MoleculeSpec::crotonic_acid();
    const nmr::EnsembleState ghz = nmr::prepare_ghz(spec);
    const double prep = std::abs(1.0 - overlap(ghz.rho, nmr::target_ghz_state()));
    const nmr::EnsembleState crushed = nmr::gradient_crusher(ghz);
    const double crush = max_abs_diff(crushed.rho.matrix(), ghz.rho.matrix());
    const double graph = std::abs(1.0 - overlap(nmr::ghz_to_graph(crushed).rho, mbqc::star_graph_state()));
    const double worst = std::max({prep, crush, graph});
    return {7, "GHZ preparation, crusher, graph rotation", true, worst <= kGhzTol,
            fmt("|1-F_ghz|=%.2e, crusher dev=%.2e, |1-F_graph|=%.2e", prep, crush, graph)};
}

Line metric_formulas() {
    const DensityMatrix ideal = DensityMatrix::from_pure(nmr::target_ghz_state());
    double worst = std::abs(nmr::witness_value(ideal) + 0.5);
    const Matrix mix = 0.675 * ideal.matrix() + 0.325 * DensityMatrix::from_pure(StateVector::from_bits("0000")).matrix();
    worst = std::max(worst, std::abs(nmr::witness_value(DensityMatrix(4, mix)) + 0.175));
    for (double a : {0.73, 0.88, 1.0}) {
        const DensityMatrix scaled(4, a * ideal.matrix(), DensityKind::deviation);
        worst = std::max(worst, std::abs(nmr::correlation_attenuated(ideal, scaled) - a));
        worst = std::max(worst, std::abs(nmr::fidelity_normalized(ideal, scaled) - 1.0));
    }
    return {8, "metric formulas", true, worst <= kMetricTol, fmt("max deviation=%.2e tol=%.0e", worst, kMetricTol)};
}

Line tomography() {
    random::Engine rng(9);
    double round_trip = 0.0;
    for (int t = 0; t < 8; ++t) {
        const DensityMatrix rho = random::density(4, rng);
        round_trip = std::max(round_trip, max_abs_diff(nmr::tomography_reconstruct(rho).matrix(), rho.matrix()));
    }
    const DensityMatrix ghz = nmr::tomography_reconstruct(DensityMatrix::from_pure(nmr::target_ghz_state()));
    double corner_dev = 0.0;
    double off_max = 0.0;
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const bool corner = (r == 0b0110 || r == 0b1001) && (c == 0b0110 || c == 0b1001);
            const double v = ghz(r, c).real();
            if (corner) corner_dev = std::max(corner_dev, std::abs(v - 0.5));
            else off_max = std::max(off_max, std::abs(v));
        }
    }
    const bool ok = round_trip < kTomographyTol && corner_dev < kTomographyTol && off_max < kTomographyTol;
    return {9, "tomography", true, ok,
            fmt("round trip=%.2e, corner dev=%.2e, max off-corner=%.2e", round_trip, corner_dev, off_max)};
}

Line spectrum() {
    const nmr::MoleculeSpec spec = nmr::MoleculeSpec::crotonic_acid();
    auto with_q4 = [](const Matrix& q4, bool mixed_neighbors) {
        const Matrix rest = mixed_neighbors ? DensityMatrix::maximally_mixed(3).matrix()
                                            : DensityMatrix::from_pure(StateVector::basis(3, 0)).matrix();
        return nmr::EnsembleState{DensityMatrix(4, kron(rest, q4)), 0.0};
    };
    const Matrix plus = DensityMatrix::from_pure(StateVector::plus()).matrix();
    const Matrix minus = DensityMatrix::from_pure(StateVector::minus()).matrix();
    const Matrix zero = DensityMatrix::from_pure(StateVector::zero()).matrix();

    bool signs = true;
    std::size_t line_count = 0;
    for (bool mixed : {false, true}) {
        const auto pos = nmr::find_lines(nmr::synthesize_spectrum(with_q4(plus, mixed), spec, 4));
        const auto neg = nmr::find_lines(nmr::synthesize_spectrum(with_q4(minus, mixed), spec, 4));
        signs = signs && !pos.empty() && pos.size() == neg.size();
        for (const auto& l : pos) signs = signs && l.amplitude > 0.0;
        for (const auto& l : neg) signs = signs && l.amplitude < 0.0;
        if (mixed) line_count = pos.size();
    }
    double silent = 0.0;
    for (const cplx& a : nmr::synthesize_spectrum(with_q4(zero, true), spec, 4).amplitudes) {
        silent = std::max(silent, std::abs(a));
    }
    const bool ok = signs && silent < kSilentTol && line_count == 8;
    return {10, "spectrum readout", true, ok,
            std::string("signs ") + (signs ? "ok" : "WRONG") +
                fmt(", |0> peak=%.2e, resolved lines=%.0f", silent, static_cast<double>(line_count))};
}

Line property_suite() {
    const auto start = std::chrono::steady_clock::now();
    const auto results = verify::run_invariant_suite(nmr::MoleculeSpec::crotonic_acid(), mbqc::kDefaultSeed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int failed = 0;
    std::string first;
    for (const auto& r : results) {
        if (!r.passed && failed++ == 0) first = r.module + "." + r.name;
    }
    std::string detail = fmt("%.0f/%.0f invariants pass, %.2f s", static_cast<double>(results.size() - failed),
                             static_cast<double>(results.size()), secs);
    if (failed > 0) detail += ", first failure " + first;
    return {11, "invariant suite", true, failed == 0 && secs < kSuiteSeconds, detail};
}

double simulated_correlation(const nmr::MoleculeSpec& spec, double budget) {
    const nmr::EnsembleState s = nmr::gradient_crusher(nmr::prepare_ghz(spec, {1.0, budget}));
    return nmr::correlation_attenuated(DensityMatrix::from_pure(nmr::target_ghz_state()),
                                       nmr::pure_equivalent(s.rho, 1.0));
}

Line relaxation_estimate() {
    const nmr::MoleculeSpec spec = nmr::MoleculeSpec::crotonic_acid();
    const double c = simulated_correlation(spec, kPrepBudget);
    bool monotone = true;
    double previous = 2.0;
    for (double budget : {0.0, 0.02, 0.05, kPrepBudget, 0.15, 0.3}) {
        const double v = simulated_correlation(spec, budget);
        monotone = monotone && v < previous;
        previous = v;
    }
    const bool in_window = c >= kCorrelationWindow[0] && c <= kCorrelationWindow[1];
    return {12, "relaxation estimate (informational)", false, in_window && monotone,
            fmt("c(85 ms)=%.4f window=[%.2f,%.2f]", c, kCorrelationWindow[0], kCorrelationWindow[1]) +
                (monotone ? ", decreasing in budget" : ", NOT monotone")};
}

}  // namespace

int main() {
    std::vector<Line> lines;
    lines.push_back(graph_anchor());
    lines.push_back(dj_projective());
    lines.push_back(dj_ensemble());
    lines.push_back(cnot_identity());
    lines.push_back(pz_channels());
    lines.push_back(correctability());
    lines.push_back(correctability_adaptive());
    lines.push_back(ghz_pipeline());
    lines.push_back(metric_formulas());
    lines.push_back(tomography());
    lines.push_back(spectrum());
    lines.push_back(property_suite());
    lines.push_back(relaxation_estimate());

    int gating_failures = 0;
    for (const Line& l : lines) {
        const char* tag = l.gating ? (l.passed ? "PASS" : "FAIL") : (l.passed ? "INFO ok" : "INFO off");
        std::printf("%-8s criterion %2d  %-44s %s\n", tag, l.id, l.title, l.detail.c_str());
        gating_failures += l.gating && !l.passed;
    }
    std::printf("%d gating criteria failed\n", gating_failures);
    return gating_failures == 0 ? 0 : 1;
}
