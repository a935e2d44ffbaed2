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

#include "owqc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "owqc/mbqc/dj.hpp"
#include "owqc/mbqc/graph.hpp"
#include "owqc/mbqc/logical_map.hpp"
#include "owqc/nmr/ensemble.hpp"
#include "owqc/nmr/gradient.hpp"
#include "owqc/nmr/metrics.hpp"
#include "owqc/nmr/pipeline.hpp"
#include "owqc/nmr/relaxation.hpp"
#include "owqc/nmr/tomography.hpp"
#include "owqc/random.hpp"

namespace owqc::verify {
namespace {

using random::Engine;

constexpr int kRandomTrials = 8;

Matrix sorted_eigenvalues(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cast<cplx>();
}

/// Complete Hermitian operator basis: the 4^n Pauli strings.
std::vector<DensityMatrix> pauli_basis(int n) {
    std::vector<DensityMatrix> out;
    const std::size_t count = dim_of(n) * dim_of(n);
    for (std::size_t p = 0; p < count; ++p) {
        std::vector<double> e(count, 0.0);
        e[p] = static_cast<double>(dim_of(n));  // reconstructs exactly P
        out.push_back(nmr::reconstruct_from_paulis(e, n, DensityKind::deviation));
    }
    return out;
}

double unitary_preserves_norm(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const int n = 1 + t % 5;
        const StateVector psi = random::state(n, rng);
        std::vector<int> targets{1 + t % n};
        if (n > 1) targets.push_back(1 + (t + 1) % n);
        const StateVector out = apply_unitary(psi, random::unitary(targets, rng));
        worst = std::max(worst, std::abs(out.amplitudes().norm() - 1.0));
    }
    return worst;
}

double unitary_preserves_spectrum(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const int n = 1 + t % 4;
        const DensityMatrix rho = random::density(n, rng);
        const DensityMatrix out = apply_unitary(rho, random::unitary({1 + t % n}, rng));
        worst = std::max(worst, max_abs_diff(sorted_eigenvalues(rho.matrix()), sorted_eigenvalues(out.matrix())));
    }
    return worst;
}

double dephase_idempotent(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const int n = 1 + t % 4;
        const int q = 1 + t % n;
        const DensityMatrix once = dephase_qubit(random::density(n, rng), q);
        const DensityMatrix twice = dephase_qubit(once, q);
        worst = std::max(worst, max_abs_diff(once.matrix(), twice.matrix()));
    }
    return worst;
}

double dephase_equals_phase_average(Engine& rng) {
    constexpr int kSamples = 64;
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const int n = 1 + t % 4;
        const int q = 1 + t % n;
        const DensityMatrix rho = random::density(n, rng);
        Matrix avg = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
        for (int k = 0; k < kSamples; ++k) {
            const double phi = 2.0 * kPi * k / kSamples;
            avg += apply_unitary(rho, gates::rotation(Axis::z, phi, q)).matrix();
        }
        avg /= kSamples;
        worst = std::max(worst, max_abs_diff(avg, dephase_qubit(rho, q).matrix()));
    }
    return worst;
}

double partial_trace_all_qubits(Engine& rng) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const DensityMatrix rho = random::density(n, rng);
        std::vector<int> all;
        for (int q = 1; q <= n; ++q) all.push_back(q);
        worst = std::max(worst, max_abs_diff(partial_trace(rho, all).matrix(), rho.matrix()));
    }
    return worst;
}

double disjoint_embeddings_commute(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const int n = 3 + t % 2;
        const QOperator a = embed_operator(random::unitary({1, 3}, rng), n);
        const QOperator b = embed_operator(random::unitary({2}, rng), n);
        worst = std::max(worst, max_abs_diff(a.matrix() * b.matrix(), b.matrix() * a.matrix()));
    }
    return worst;
}

double dj_branch_determinism() {
    double worst = 0.0;
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        const double expected = mbqc::is_constant(f) ? 1.0 : -1.0;
        for (const mbqc::Branch& b : mbqc::kAllBranches) {
            const mbqc::DJOutcome out = mbqc::run_dj(f, b);
            worst = std::max(worst, std::abs(out.control_qubit_sx - expected));
        }
    }
    return worst;
}

double branch_probabilities_uniform() {
    double worst = 0.0;
    const StateVector g = mbqc::star_graph_state();
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        const mbqc::FeedForwardRule rule = mbqc::FeedForwardRule::for_oracle(f);
        for (int s1 = 0; s1 < 2; ++s1) {
            const mbqc::MeasurementResult m1 = mbqc::measure_xy(g, 1, {rule.alpha1}, s1);
            worst = std::max(worst, std::abs(m1.record.probability - 0.5));
            for (int s2 = 0; s2 < 2; ++s2) {
                const mbqc::MeasurementResult m2 = mbqc::measure_xy(m1.state, 2, {rule.alpha2}, s2);
                worst = std::max(worst, std::abs(m1.record.probability * m2.record.probability - 0.25));
            }
        }
    }
    return worst;
}

double graph_state_stabilized() {
    const DensityMatrix rho = DensityMatrix::from_pure(mbqc::star_graph_state());
    double worst = 0.0;
    for (const QOperator& k : mbqc::graph_stabilizers(mbqc::Graph::star())) {
        worst = std::max(worst, max_abs_diff(k.matrix() * rho.matrix(), rho.matrix()));
    }
    return worst;
}

double oracle_unitaries_and_verdicts() {
    double worst = 0.0;
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        const QOperator u = mbqc::oracle_unitary(f);
        worst = std::max(worst, max_abs_diff(u.matrix().adjoint() * u.matrix(), Matrix::Identity(4, 4)));
        worst = std::max(worst, std::abs(mbqc::dj_circuit_readout(f) - (mbqc::is_constant(f) ? 1.0 : -1.0)));
    }
    return worst;
}

double logical_map_unitary_on_grid() {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            for (const mbqc::Branch& b : mbqc::kAllBranches) {
                const Matrix m = mbqc::extract_logical_map(2.0 * kPi * i / 8, 2.0 * kPi * j / 8, b.s1, b.s2).matrix();
                worst = std::max(worst, max_abs_diff(m.adjoint() * m, Matrix::Identity(4, 4)));
            }
        }
    }
    return worst;
}

double cnot_decomposition(const nmr::MoleculeSpec& spec) {
    double worst = 0.0;
    const int n = spec.num_spins();
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;
            const Matrix decomposed = embed_operator(nmr::cnot_decomposed(j, k, spec), n).matrix();
            const Matrix canonical = embed_operator(gates::cnot(j, k), n).matrix();
            worst = std::max(worst, phase_invariant_distance(canonical, decomposed));
        }
    }
    return worst;
}

double pz_matches_dephasing() {
    double worst = 0.0;
    for (int q : {1, 2}) {
        for (const DensityMatrix& basis : pauli_basis(4)) {
            const nmr::EnsembleState in{basis, 0.0};
            worst = std::max(worst, max_abs_diff(nmr::pz_sequence(in, q).rho.matrix(),
                                                 dephase_qubit(basis, q).matrix()));
        }
    }
    return worst;
}

double ensemble_matches_projective(const nmr::MoleculeSpec& spec) {
    double worst = 0.0;
    const std::array<int, 1> q4{4};
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        const nmr::EnsembleDJResult ens = nmr::run_dj_ensemble(f, spec);
        const DensityMatrix proj = nmr::projective_branch_average(f);
        worst = std::max(worst, max_abs_diff(ens.final_state.rho.matrix(), proj.matrix()));
        worst = std::max(worst, max_abs_diff(partial_trace(ens.final_state.rho, q4).matrix(),
                                             partial_trace(proj, q4).matrix()));
    }
    return worst;
}

double crusher_is_projection(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const nmr::EnsembleState s{random::density(1 + t % 4, rng), 0.0};
        const nmr::EnsembleState once = nmr::gradient_crusher(s);
        const nmr::EnsembleState twice = nmr::gradient_crusher(once);
        worst = std::max(worst, max_abs_diff(once.rho.matrix(), twice.rho.matrix()));
        worst = std::max(worst, std::abs(once.rho.trace() - s.rho.trace()));
    }
    return worst;
}

double relaxation_cptp(const nmr::MoleculeSpec& spec) {
    // Returns how far the smallest Choi eigenvalue dips below zero, plus any
    // trace-preservation error on a random state.
    double worst = 0.0;
    for (int q = 1; q <= spec.num_spins(); ++q) {
        const double t1 = spec.t1(q);
        const double t2 = spec.t2(q);
        for (double t : {0.0, 1e-3, 0.085, 1.0, 10.0}) {
            const Matrix choi = nmr::relaxation_choi(t1, t2, t);
            worst = std::max(worst, -min_eigenvalue(choi));
            // partial trace over the output factor must give the identity
            Matrix out_trace = Matrix::Zero(2, 2);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) out_trace(i, j) = choi.block(2 * i, 2 * j, 2, 2).trace();
            }
            worst = std::max(worst, max_abs_diff(out_trace, Matrix::Identity(2, 2)));
        }
    }
    return worst;
}

double witness_lower_bound(Engine& rng) {
    // Returns the worst violation of W >= -1/2, and checks equality at GHZ.
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials * 4; ++t) {
        const DensityMatrix rho = random::density(4, rng);
        worst = std::max(worst, -0.5 - nmr::witness_value(rho));
    }
    const StateVector ghz = nmr::target_ghz_state();
    worst = std::max(worst, std::abs(nmr::witness_value(DensityMatrix::from_pure(ghz)) + 0.5));
    return worst;
}

double metric_linearity(Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const DensityMatrix id = DensityMatrix::from_pure(random::state(4, rng));
        const DensityMatrix a = random::hermitian(4, rng);
        const DensityMatrix b = random::hermitian(4, rng);
        const double x = 0.37 + 0.1 * t;
        const double y = -1.3 + 0.2 * t;
        const DensityMatrix combo(4, x * a.matrix() + y * b.matrix(), DensityKind::deviation);
        const double lhs = nmr::correlation_attenuated(id, combo);
        const double rhs = x * nmr::correlation_attenuated(id, a) + y * nmr::correlation_attenuated(id, b);
        worst = std::max(worst, std::abs(lhs - rhs));
        const double scale = 0.05 + 0.5 * t;
        const DensityMatrix scaled(4, scale * a.matrix(), DensityKind::deviation);
        worst = std::max(worst, std::abs(nmr::fidelity_normalized(id, scaled) - nmr::fidelity_normalized(id, a)));
    }
    return worst;
}

double evolution_commutes_with_gradient(const nmr::MoleculeSpec& spec, Engine& rng) {
    double worst = 0.0;
    for (int t = 0; t < kRandomTrials; ++t) {
        const nmr::EnsembleState s{random::density(spec.num_spins(), rng), 0.0};
        const double time = 1e-3 * (t + 1);
        const double phi = 0.3 + 0.7 * t;
        const auto ab = nmr::gradient_pulse(nmr::free_evolution(s, spec, time), phi);
        const auto ba = nmr::free_evolution(nmr::gradient_pulse(s, phi), spec, time);
        worst = std::max(worst, max_abs_diff(ab.rho.matrix(), ba.rho.matrix()));
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const nmr::MoleculeSpec& spec, std::uint64_t seed) {
    Engine rng(seed);
    struct Entry {
        const char* module;
        const char* name;
        double tolerance;
        std::function<double()> run;
    };
    const std::vector<Entry> entries{
        {"qcore", "unitary_preserves_norm", kExactTol, [&] { return unitary_preserves_norm(rng); }},
        {"qcore", "unitary_preserves_spectrum", kExactTol, [&] { return unitary_preserves_spectrum(rng); }},
        {"qcore", "dephase_idempotent", 0.0, [&] { return dephase_idempotent(rng); }},
        {"qcore", "dephase_equals_phase_average", kChannelTol, [&] { return dephase_equals_phase_average(rng); }},
        {"qcore", "partial_trace_all_qubits_is_identity", kExactTol, [&] { return partial_trace_all_qubits(rng); }},
        {"qcore", "disjoint_embeddings_commute", kExactTol, [&] { return disjoint_embeddings_commute(rng); }},
        {"mbqc", "dj_branch_determinism", 1e-9, [] { return dj_branch_determinism(); }},
        {"mbqc", "branch_probabilities_uniform", kExactTol, [] { return branch_probabilities_uniform(); }},
        {"mbqc", "graph_state_stabilized", kExactTol, [] { return graph_state_stabilized(); }},
        {"mbqc", "oracle_unitaries_and_verdicts", kExactTol, [] { return oracle_unitaries_and_verdicts(); }},
        {"mbqc", "logical_map_unitary_on_grid", kExactTol, [] { return logical_map_unitary_on_grid(); }},
        {"nmr", "cnot_decomposition_all_pairs", kExactTol, [&] { return cnot_decomposition(spec); }},
        {"nmr", "pz_sequence_equals_dephasing", kChannelTol, [] { return pz_matches_dephasing(); }},
        {"nmr", "ensemble_matches_projective_average", 1e-9, [&] { return ensemble_matches_projective(spec); }},
        {"nmr", "gradient_crusher_is_projection", kExactTol, [&] { return crusher_is_projection(rng); }},
        {"nmr", "relaxation_is_cptp", kExactTol, [&] { return relaxation_cptp(spec); }},
        {"nmr", "witness_lower_bound", kExactTol, [&] { return witness_lower_bound(rng); }},
        {"nmr", "correlation_linear_fidelity_scale_invariant", kExactTol, [&] { return metric_linearity(rng); }},
        {"nmr", "free_evolution_commutes_with_gradient", kExactTol,
         [&] { return evolution_commutes_with_gradient(spec, rng); }},
    };

    std::vector<CheckResult> results;
    for (const Entry& e : entries) {
        CheckResult r{e.module, e.name, false, 0.0, e.tolerance, {}};
        try {
            r.worst = e.run();
            r.passed = r.worst <= e.tolerance;
        } catch (const std::exception& ex) {
            r.detail = ex.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace owqc::verify
