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

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "owqc/mbqc/dj.hpp"
#include "owqc/mbqc/graph.hpp"
#include "owqc/nmr/ensemble.hpp"
#include "owqc/nmr/gradient.hpp"
#include "owqc/nmr/metrics.hpp"
#include "owqc/nmr/pipeline.hpp"
#include "owqc/nmr/relaxation.hpp"
#include "owqc/nmr/tomography.hpp"
#include "owqc/random.hpp"

using namespace owqc;
using namespace owqc::nmr;
using owqc::oracle::sigma;

namespace {

random::Engine seeded(std::uint64_t salt) { return random::Engine(0xa11ce000ULL + salt); }

EnsembleState wrap(const DensityMatrix& rho) { return {rho, 0.0}; }

/// H0 assembled from Pauli matrices, rad/s.
Matrix h0_dense(const MoleculeSpec& spec) {
    const int n = spec.num_spins();
    const std::size_t d = dim_of(n);
    Matrix h = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (int j = 1; j <= n; ++j) {
        const Matrix iz = oracle::embed_elementwise(sigma('z') / 2.0, {j}, n);
        h += spec.omega(j) * iz;
        for (int k = j + 1; k <= n; ++k) {
            const Matrix kz = oracle::embed_elementwise(sigma('z') / 2.0, {k}, n);
            h += 2.0 * kPi * spec.j_hz(j, k) * iz * kz;
        }
    }
    return h;
}

}  // namespace

TEST(molecule, crotonic_acid_parameters) {
    const MoleculeSpec m = MoleculeSpec::crotonic_acid();
    ASSERT_EQ(m.num_spins(), 4);
    EXPECT_EQ(m.nucleus_on(4).label, "C1");
    EXPECT_EQ(m.nucleus_on(1).label, "C2");
    EXPECT_DOUBLE_EQ(m.t1(4), 12.37);
    EXPECT_DOUBLE_EQ(m.t2(4), 0.3762);
    EXPECT_DOUBLE_EQ(m.j_hz(1, 4), m.j_hz(4, 1));
    EXPECT_FALSE(m.relaxation_defaulted());
}

TEST(molecule, validation_names_the_field) {
    const std::vector<Nucleus> nuclei{{"A", 0.0, 1.0, 0.5}, {"B", 10.0, 1.0, 0.5}};
    try {
        MoleculeSpec(nuclei, {{0.0, 5.0}, {4.0, 0.0}}, {0, 1});
        FAIL() << "asymmetric J accepted";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("(A,B)"), std::string::npos) << e.what();
    }
    EXPECT_THROW(MoleculeSpec(nuclei, {{1.0, 0.0}, {0.0, 0.0}}, {0, 1}), std::invalid_argument);
    EXPECT_THROW(MoleculeSpec({{"A", 0.0, 0.4, 0.5}, {"B", 0.0, 1.0, 0.5}}, {{0, 0}, {0, 0}}, {0, 1}),
                 std::invalid_argument);
    EXPECT_THROW(MoleculeSpec(nuclei, {{0, 0}, {0, 0}}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(MoleculeSpec::crotonic_acid().nucleus_on(5), std::out_of_range);
}

TEST(ensemble, pseudopure_state) {
    const MoleculeSpec spec = MoleculeSpec::uniform(2);
    const EnsembleState s = pseudopure_init(spec, 0.25);
    EXPECT_NEAR(s.rho(0, 0).real(), 0.75 / 4 + 0.25, 1e-15);
    EXPECT_NEAR(s.rho(3, 3).real(), 0.75 / 4, 1e-15);
    EXPECT_NEAR(s.rho.trace(), 1.0, 1e-15);
    EXPECT_THROW(pseudopure_init(spec, 0.0), std::invalid_argument);
    EXPECT_THROW(pseudopure_init(spec, 1.5), std::invalid_argument);
}

TEST(ensemble, free_evolution_matches_matrix_exponential) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    auto rng = seeded(1);
    const EnsembleState s = wrap(random::density(4, rng));
    const double t = 3.7e-3;
    const Matrix u = oracle::expm_evolution(h0_dense(spec), t);
    const EnsembleState out = free_evolution(s, spec, t);
    EXPECT_LT(max_abs_diff(out.rho.matrix(), u * s.rho.matrix() * u.adjoint()), 1e-11);
    EXPECT_DOUBLE_EQ(out.elapsed_s, t);
    EXPECT_THROW(free_evolution(s, spec, -1.0), std::invalid_argument);
}

TEST(ensemble, coupling_evolution_realizes_zz_quarter_turn) {
    const MoleculeSpec spec = MoleculeSpec::uniform(2, 0.0, 50.0);
    const double t = coupling_gate_time(spec, 1, 2);
    EXPECT_DOUBLE_EQ(t, 0.01);
    const Matrix u = oracle::expm_evolution(h0_dense(spec), t);
    EXPECT_LT(phase_invariant_distance(u, gates::zz_phase(1, 2, kPi / 4).matrix()), 1e-12);
}

TEST(ensemble, decomposed_cnot_all_pairs) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    for (int c = 1; c <= 4; ++c) {
        for (int t = 1; t <= 4; ++t) {
            if (c == t) continue;
            const QOperator d = cnot_decomposed(c, t, spec);
            EXPECT_LT(phase_invariant_distance(embed_operator(gates::cnot(c, t), 4).matrix(),
                                               embed_operator(d, 4).matrix()),
                      1e-10)
                << c << "->" << t;
        }
    }
    EXPECT_EQ(cnot_sequence(1, 2).size(), 5U);
}

TEST(ensemble, ghz_network_and_graph_rotation) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    const EnsembleState ghz = prepare_ghz(spec);
    EXPECT_NEAR(overlap(ghz.rho, target_ghz_state()), 1.0, 1e-10);
    EXPECT_EQ(ghz_network().size(), 18U);
    const Vector expected = (StateVector::from_bits("0110").amplitudes() + StateVector::from_bits("1001").amplitudes()) /
                            std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(target_ghz_state().amplitudes(), expected), 1e-15);

    const EnsembleState crushed = gradient_crusher(ghz);
    EXPECT_LT(max_abs_diff(crushed.rho.matrix(), ghz.rho.matrix()), 1e-10);
    EXPECT_NEAR(overlap(ghz_to_graph(crushed).rho, mbqc::star_graph_state()), 1.0, 1e-10);
}

TEST(ensemble, pseudopure_scaling_carries_through) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    const EnsembleState ghz = prepare_ghz(spec, {0.3, std::nullopt});
    EXPECT_NEAR(overlap(ghz.rho, target_ghz_state()), 0.7 / 16 + 0.3, 1e-12);
    EXPECT_NEAR(overlap(pure_equivalent(ghz.rho, 0.3), target_ghz_state()), 1.0, 1e-12);
}

TEST(relaxation, kraus_matches_closed_form) {
    auto rng = seeded(2);
    const DensityMatrix rho = random::density(1, rng);
    const double t1 = 2.0;
    const double t2 = 0.7;
    const double t = 0.4;
    const auto kraus = relaxation_kraus(t1, t2, t);
    const DensityMatrix out = apply_channel(rho, kraus, {1});
    const double decay1 = std::exp(-t / t1);
    EXPECT_NEAR(out(1, 1).real(), rho(1, 1).real() * decay1, 1e-14);
    EXPECT_NEAR(out(0, 0).real(), 1.0 - rho(1, 1).real() * decay1, 1e-14);
    EXPECT_NEAR(std::abs(out(0, 1) - rho(0, 1) * std::exp(-t / t2)), 0.0, 1e-14);
}

TEST(relaxation, validation_and_limits) {
    EXPECT_THROW(relaxation_kraus(1.0, 2.5, 0.1), std::invalid_argument);
    EXPECT_THROW(relaxation_kraus(1.0, 0.5, -0.1), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    const auto kraus = relaxation_kraus(inf, inf, 10.0);
    Matrix sum = Matrix::Zero(2, 2);
    for (const Matrix& k : kraus) sum += k * k.adjoint();
    EXPECT_LT(max_abs_diff(sum, Matrix::Identity(2, 2)), 1e-15);
}

TEST(relaxation, choi_is_positive_and_trace_preserving) {
    for (double t : {0.0, 0.01, 1.0, 100.0}) {
        const Matrix choi = relaxation_choi(4.0, 0.5, t);
        EXPECT_GE(min_eigenvalue(choi), -1e-10);
        Matrix out = Matrix::Zero(2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) out(i, j) = choi.block(2 * i, 2 * j, 2, 2).trace();
        }
        EXPECT_LT(max_abs_diff(out, Matrix::Identity(2, 2)), 1e-14);
    }
}

TEST(relaxation, budget_lowers_ghz_overlap_monotonically) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    double previous = 1.0 + 1e-12;
    for (double budget : {0.0, 0.01, 0.05, 0.085, 0.2}) {
        const EnsembleState s = prepare_ghz(spec, {1.0, budget});
        const double ov = overlap(s.rho, target_ghz_state());
        EXPECT_LT(ov, previous);
        EXPECT_NEAR(s.elapsed_s, budget, 1e-12);
        previous = ov;
    }
}

TEST(gradient, pulse_matches_matrix_exponential) {
    auto rng = seeded(3);
    const DensityMatrix rho = random::density(3, rng);
    Matrix fz = Matrix::Zero(8, 8);
    for (int q = 1; q <= 3; ++q) fz += oracle::embed_elementwise(sigma('z') / 2.0, {q}, 3);
    const Matrix u = oracle::expm_evolution(fz, 1.3);
    EXPECT_LT(max_abs_diff(gradient_pulse(wrap(rho), 1.3).rho.matrix(), u * rho.matrix() * u.adjoint()), 1e-13);
}

TEST(gradient, average_equals_crusher_and_is_a_projection) {
    auto rng = seeded(4);
    const EnsembleState s = wrap(random::density(4, rng));
    const EnsembleState avg = gradient_average(s, 16);
    const EnsembleState crush = gradient_crusher(s);
    EXPECT_LT(max_abs_diff(avg.rho.matrix(), crush.rho.matrix()), 1e-12);
    EXPECT_LT(max_abs_diff(gradient_crusher(crush).rho.matrix(), crush.rho.matrix()), 1e-15);
    EXPECT_NEAR(crush.rho.trace(), 1.0, 1e-14);
    // zero-quantum element survives, single-quantum element does not
    EXPECT_EQ(crush.rho(0b0110, 0b1001), s.rho(0b0110, 0b1001));
    EXPECT_EQ(crush.rho(0b0000, 0b0001), cplx(0.0));
}

TEST(gradient, pz_sequences_dephase_one_qubit_on_operator_basis) {
    for (int q : {1, 2}) {
        double worst = 0.0;
        for (std::size_t p = 0; p < 256; ++p) {
            std::vector<double> e(256, 0.0);
            e[p] = 16.0;
            const DensityMatrix basis = reconstruct_from_paulis(e, 4, DensityKind::deviation);
            worst = std::max(worst, max_abs_diff(pz_sequence(wrap(basis), q).rho.matrix(), dephase_qubit(basis, q).matrix()));
        }
        EXPECT_LT(worst, 1e-8) << "qubit " << q;
    }
    EXPECT_THROW(pz_steps(3), std::invalid_argument);
}

TEST(gradient, pz_sequence_keeps_other_coherences) {
    auto rng = seeded(5);
    const DensityMatrix rho = random::density(4, rng);
    const DensityMatrix out = pz_sequence(wrap(rho), 2).rho;
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const bool flips_q2 = oracle::bit_of(r, 2, 4) != oracle::bit_of(c, 2, 4);
            EXPECT_NEAR(std::abs(out(r, c) - (flips_q2 ? cplx(0.0) : rho(r, c))), 0.0, 1e-12);
        }
    }
}

TEST(gradient, mimic_measurement_labels_outcomes) {
    const StateVector minus_on_2 = StateVector::product(
        std::vector<StateVector>{StateVector::zero(), StateVector::minus(), StateVector::zero(), StateVector::zero()});
    const EnsembleState out = mimic_measurement(wrap(DensityMatrix::from_pure(minus_on_2)), 2, 0.0);
    EXPECT_NEAR(out.rho(0b0100, 0b0100).real(), 1.0, 1e-12);
    const StateVector minus_on_1 = StateVector::minus().tensor(StateVector::basis(3, 0));
    const EnsembleState flipped = mimic_measurement(wrap(DensityMatrix::from_pure(minus_on_1)), 1, kPi);
    // for alpha = pi the ket |->  is the '+' outcome
    EXPECT_NEAR(flipped.rho(0, 0).real(), 1.0, 1e-12);
    EXPECT_THROW(mimic_measurement(out, 2, kPi), std::invalid_argument);
    EXPECT_THROW(mimic_measurement(out, 1, 0.5), std::invalid_argument);
    EXPECT_NO_THROW(mimic_measurement(out, 1, 0.5, true));
}

TEST(pipeline, ensemble_run_matches_projective_average) {
    const MoleculeSpec spec = MoleculeSpec::crotonic_acid();
    for (mbqc::Oracle f : mbqc::kAllOracles) {
        for (double eps : {1.0, 0.3}) {
            const EnsembleDJResult r = run_dj_ensemble(f, spec, {eps, std::nullopt});
            EXPECT_NEAR(r.control_qubit_sx, (mbqc::is_constant(f) ? 1.0 : -1.0) * eps, 1e-9);
            EXPECT_LT(max_abs_diff(r.final_state.rho.matrix(), projective_branch_average(f, eps).matrix()), 1e-9);
            for (double p : r.branch_populations) EXPECT_NEAR(p, 0.25, 1e-12);
        }
    }
    EXPECT_THROW(run_dj_ensemble(mbqc::Oracle::f1, MoleculeSpec::uniform(3)), std::invalid_argument);
}

TEST(tomography, pauli_labels) {
    EXPECT_EQ(pauli_label(0, 2), "II");
    EXPECT_EQ(pauli_label(1, 2), "IX");
    EXPECT_EQ(pauli_label(4 * 3 + 2, 2), "ZY");
}

TEST(tomography, expectations_match_dense_traces) {
    auto rng = seeded(6);
    const DensityMatrix rho = random::density(2, rng);
    const std::vector<double> e = pauli_expectations(rho);
    const std::array<char, 4> names{'i', 'x', 'y', 'z'};
    for (std::size_t p = 0; p < 16; ++p) {
        const Matrix op = kron(sigma(names[p / 4]), sigma(names[p % 4]));
        EXPECT_NEAR(e[p], (rho.matrix() * op).trace().real(), 1e-14) << pauli_label(p, 2);
    }
}

TEST(tomography, noiseless_round_trip) {
    auto rng = seeded(7);
    for (int n = 1; n <= 4; ++n) {
        const DensityMatrix rho = random::density(n, rng);
        EXPECT_LT(max_abs_diff(tomography_reconstruct(rho).matrix(), rho.matrix()), 1e-10);
    }
}

TEST(tomography, ghz_real_part_corners) {
    const DensityMatrix ghz = tomography_reconstruct(DensityMatrix::from_pure(target_ghz_state()));
    int big = 0;
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const double v = ghz(r, c).real();
            const bool corner = (r == 0b0110 || r == 0b1001) && (c == 0b0110 || c == 0b1001);
            if (corner) {
                EXPECT_NEAR(v, 0.5, 1e-10);
                ++big;
            } else {
                EXPECT_LT(std::abs(v), 1e-10);
            }
        }
    }
    EXPECT_EQ(big, 4);
}

TEST(tomography, noisy_reconstruction_stays_hermitian_with_bounded_trace_error) {
    const DensityMatrix ghz = DensityMatrix::from_pure(target_ghz_state());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const DensityMatrix out = tomography_reconstruct(ghz, {0.01, seed});
        EXPECT_TRUE(is_hermitian(out.matrix()));
        EXPECT_LT(std::abs(out.trace() - 1.0), 0.05);
    }
    EXPECT_THROW(tomography_reconstruct(ghz, {-0.1, 0}), std::invalid_argument);
}

TEST(tomography, noise_is_seeded) {
    const DensityMatrix ghz = DensityMatrix::from_pure(target_ghz_state());
    EXPECT_EQ(tomography_reconstruct(ghz, {0.02, 9}).matrix(), tomography_reconstruct(ghz, {0.02, 9}).matrix());
    EXPECT_NE(tomography_reconstruct(ghz, {0.02, 9}).matrix(), tomography_reconstruct(ghz, {0.02, 10}).matrix());
}

TEST(metrics, formula_examples) {
    const DensityMatrix ideal = DensityMatrix::from_pure(target_ghz_state());
    EXPECT_NEAR(correlation_attenuated(ideal, ideal), 1.0, 1e-14);
    EXPECT_NEAR(fidelity_normalized(ideal, ideal), 1.0, 1e-14);
    for (double a : {0.73, 0.88}) {
        const DensityMatrix scaled(4, a * ideal.matrix(), DensityKind::deviation);
        EXPECT_NEAR(correlation_attenuated(ideal, scaled), a, 1e-14);
        EXPECT_NEAR(fidelity_normalized(ideal, scaled), 1.0, 1e-14);
    }
    EXPECT_THROW(fidelity_normalized(ideal, DensityMatrix(4, Matrix::Zero(16, 16), DensityKind::deviation)),
                 std::domain_error);
}

TEST(metrics, fidelity_value_from_prescribed_overlap) {
    // rho_exp = 0.88 P + sqrt(1 - 0.88^2) Q with Q a unit-norm traceless
    // operator orthogonal to P gives F = 0.88.
    const StateVector ghz = target_ghz_state();
    const DensityMatrix p = DensityMatrix::from_pure(ghz);
    const Matrix q = (DensityMatrix::from_pure(StateVector::from_bits("0000")).matrix() -
                      DensityMatrix::from_pure(StateVector::from_bits("1111")).matrix()) /
                     std::sqrt(2.0);
    const DensityMatrix exp(4, 0.88 * p.matrix() + std::sqrt(1 - 0.88 * 0.88) * q, DensityKind::deviation);
    EXPECT_NEAR(fidelity_normalized(p, exp), 0.88, 1e-14);
}

TEST(metrics, witness_values) {
    EXPECT_NEAR(witness_value(DensityMatrix::from_pure(target_ghz_state())), -0.5, 1e-14);
    EXPECT_NEAR(witness_value(DensityMatrix::maximally_mixed(4)), 0.4375, 1e-14);
    const Matrix mixed = 0.675 * DensityMatrix::from_pure(target_ghz_state()).matrix() +
                         0.325 * DensityMatrix::from_pure(StateVector::from_bits("0000")).matrix();
    EXPECT_NEAR(witness_value(DensityMatrix(4, mixed)), -0.175, 1e-14);
    EXPECT_THROW(witness_value(DensityMatrix::maximally_mixed(3)), std::invalid_argument);
}

TEST(metrics, correlation_is_linear_on_hermitian_inputs) {
    auto rng = seeded(8);
    const DensityMatrix id = DensityMatrix::from_pure(target_ghz_state());
    const DensityMatrix a = random::hermitian(4, rng);
    const DensityMatrix b = random::hermitian(4, rng);
    const DensityMatrix sum(4, 2.0 * a.matrix() - 0.5 * b.matrix(), DensityKind::deviation);
    EXPECT_NEAR(correlation_attenuated(id, sum),
                2.0 * correlation_attenuated(id, a) - 0.5 * correlation_attenuated(id, b), 1e-13);
}
