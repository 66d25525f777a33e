// Copyright 2026 The Walshpulse Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.h"
#include "walshpulse/compiler.h"
#include "walshpulse/evolve.h"
#include "walshpulse/executor.h"
#include "walshpulse/metrics.h"
#include "walshpulse/state_vector.h"

using namespace walshpulse;

namespace {

constexpr double kPi = std::numbers::pi;

PauliStringOperator random_operator(int n, int terms, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> mask(0, (1ull << n) - 1);
    std::normal_distribution<double> g;
    PauliStringOperator h(n);
    for (int k = 0; k < terms; ++k) {
        h.add(g(rng), PauliString{mask(rng), mask(rng)});
    }
    return h;
}

oracle::Matrix dense(const PauliStringOperator &h) {
    int n = h.n_qubits();
    oracle::Matrix m = oracle::Matrix::Zero(1 << n, 1 << n);
    for (const auto &t : h.terms()) {
        oracle::Matrix p = oracle::Matrix::Identity(1 << n, 1 << n);
        for (int q = 0; q < n; ++q) {
            p = oracle::embed(oracle::pauli_matrix(t.string.at(q)), q, n) * p;
        }
        m += t.coefficient * p;
    }
    return m;
}

double distance(const StateVector &a, const oracle::Vector &b) {
    return (oracle::to_vector(a) - b).norm();
}

TargetSpec random_target(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> s(-1.5, 1.5);
    std::uniform_int_distribution<int> kind(0, 4);
    TargetSpec t{n, {}};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            switch (kind(rng)) {
                case 0:
                    t.terms.push_back(TargetTerm::pauli(i, j, Pauli::X, Pauli::X, s(rng)));
                    break;
                case 1:
                    t.terms.push_back(TargetTerm::pauli(i, j, Pauli::Y, Pauli::Y, s(rng)));
                    break;
                case 2:
                    t.terms.push_back(TargetTerm::pauli(i, j, Pauli::Z, Pauli::X, s(rng)));
                    break;
                default:
                    break;
            }
        }
    }
    return t;
}

}  // namespace

TEST(sim, pauli_operator_matches_dense) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 5; ++n) {
        auto h = random_operator(n, 12, rng);
        auto psi = StateVector::haar_random(n, 100 + n);
        std::vector<Amplitude> out(psi.dimension());
        h.apply(psi.amplitudes(), out);
        oracle::Vector want = dense(h) * oracle::to_vector(psi);
        for (std::size_t k = 0; k < out.size(); ++k) {
            EXPECT_LT(std::abs(out[k] - want[k]), 1e-12);
        }
        EXPECT_NEAR(h.expectation(psi.amplitudes()), (oracle::to_vector(psi).adjoint() * want)(0).real(), 1e-12);
    }
}

TEST(sim, evolve_zero_time_is_identity) {
    std::mt19937_64 rng(2);
    auto h = random_operator(3, 5, rng);
    auto psi = StateVector::haar_random(3, 9);
    auto out = evolve(h, 0.0, psi);
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_EQ(out[k], psi[k]);
    }
}

TEST(sim, evolve_xx_quarter_period) {
    PauliStringOperator h(2);
    h.add(1.0, PauliString::from_text("XX"));
    auto out = evolve(h, kPi / 4, StateVector(2));
    EXPECT_NEAR(out[0].real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(out[3].imag(), -1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(out[1]) + std::abs(out[2]), 0.0, 1e-12);
}

TEST(sim, evolve_matches_dense_exponential) {
    std::mt19937_64 rng(3);
    for (int n : {2, 4, 6}) {
        auto h = random_operator(n, 3 * n, rng);
        auto psi = StateVector::haar_random(n, n);
        double t = 0.37 * n;
        auto out = evolve(h, t, psi, 1e-12);
        oracle::Vector want = oracle::expm_hermitian(dense(h), t) * oracle::to_vector(psi);
        EXPECT_LT(distance(out, want), 1e-10);
    }
}

TEST(sim, evolve_preserves_norm) {
    std::mt19937_64 rng(4);
    auto h = random_operator(8, 40, rng);
    auto psi = StateVector::haar_random(8, 4);
    auto out = evolve(h, 2.5, psi);
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
}

TEST(sim, evolve_rejects_bad_tolerance) {
    PauliStringOperator h(1);
    h.add(1.0, PauliString::from_text("X"));
    EXPECT_THROW(evolve(h, 1.0, StateVector(1), 0.0), std::invalid_argument);
}

TEST(sim, evolve_is_deterministic) {
    std::mt19937_64 rng(5);
    auto h = random_operator(5, 20, rng);
    auto a = evolve(h, 1.3, StateVector::haar_random(5, 77));
    auto b = evolve(h, 1.3, StateVector::haar_random(5, 77));
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        EXPECT_EQ(a[k], b[k]);
    }
}

TEST(sim, instant_layer_examples) {
    auto psi = StateVector::haar_random(2, 3);
    auto same = psi;
    apply_instant_layer(same, {Pauli::I, Pauli::I});
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_EQ(same[k], psi[k]);
    }

    auto flipped = psi;
    apply_instant_layer(flipped, {Pauli::X, Pauli::I});
    // exp(-i pi X / 2) = -i X
    const Amplitude mi(0, -1);
    EXPECT_LT(std::abs(flipped[0] - mi * psi[1]), 1e-15);
    EXPECT_LT(std::abs(flipped[1] - mi * psi[0]), 1e-15);
    EXPECT_LT(std::abs(flipped[2] - mi * psi[3]), 1e-15);

    auto ideal = StateVector(1);
    auto off = StateVector(1);
    apply_instant_layer(ideal, {Pauli::X});
    std::vector<double> delta{0.1};
    apply_instant_layer(off, {Pauli::X}, {}, delta);
    EXPECT_NEAR(std::abs(ideal.inner(off)), std::cos(0.05), 1e-14);

    auto back = psi;
    std::vector<int> signs{-1, 1};
    std::vector<double> d2{0.2, -0.3};
    apply_instant_layer(back, {Pauli::Y, Pauli::Z}, signs, d2);
    apply_instant_layer(back, {Pauli::Y, Pauli::Z}, signs, d2, true);
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_LT(std::abs(back[k] - psi[k]), 1e-14);
    }
}

TEST(sim, finite_interval_limits) {
    auto r = ResourceHamiltonian::power_law_chain(2, 1.0);
    auto h_r = resource_operator(r);
    PulseLayer layer{Pauli::X, Pauli::Z};
    std::vector<int> signs{1, 1};
    std::vector<double> delta{0.0, 0.0};
    auto psi = StateVector::haar_random(2, 8);

    // With no resource the two pulses undo each other.
    PauliStringOperator zero(2);
    auto h_p = pulse_hamiltonian(layer, signs, delta, 0.01);
    auto idle = run_interval_finite(zero, h_p, 0.5, 0.01, psi);
    EXPECT_NEAR(std::abs(idle.inner(psi)), 1.0, 1e-12);

    // t_p = 0 reduces to evolution alone.
    auto plain = run_interval_finite(h_r, PauliStringOperator(2), 0.5, 0.0, psi);
    auto direct = evolve(h_r, 0.5, psi);
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_LT(std::abs(plain[k] - direct[k]), 1e-12);
    }

    EXPECT_THROW(run_interval_finite(h_r, h_p, 0.02, 0.01, psi), std::invalid_argument);
}

TEST(sim, finite_interval_matches_dense_product) {
    auto r = ResourceHamiltonian::power_law_chain(2, 1.0, 1.0, true);
    auto h_r = resource_operator(r);
    PulseLayer layer{Pauli::Y, Pauli::X};
    std::vector<int> signs{1, -1};
    std::vector<double> delta{0.05, -0.02};
    double t_p = 0.02;
    double interval = 0.3;
    auto h_p = pulse_hamiltonian(layer, signs, delta, t_p);
    auto psi = StateVector::haar_random(2, 12);
    auto out = run_interval_finite(h_r, h_p, interval, t_p, psi);

    oracle::Matrix hr = oracle::resource(r);
    oracle::Matrix hp = dense(h_p);
    oracle::Matrix u = oracle::expm_hermitian(hr - hp, t_p) * oracle::expm_hermitian(hr, interval - 2 * t_p) *
                       oracle::expm_hermitian(hr + hp, t_p);
    EXPECT_LT(distance(out, u * oracle::to_vector(psi)), 1e-11);
}

// Shrinking t_p approaches the instantaneous sandwich P^-1 exp(-i H dt) P with
// an O(t_p) deviation.
TEST(sim, finite_interval_converges_linearly) {
    auto r = ResourceHamiltonian::power_law_chain(4, 1.0);
    auto h_r = resource_operator(r);
    PulseLayer layer{Pauli::X, Pauli::Y, Pauli::Z, Pauli::X};
    std::vector<int> signs{1, 1, -1, 1};
    std::vector<double> delta(4, 0.0);
    auto psi = StateVector::haar_random(4, 21);
    double interval = 0.4;

    auto ideal = psi;
    apply_instant_layer(ideal, layer, signs, delta);
    ideal = evolve(h_r, interval, ideal);
    apply_instant_layer(ideal, layer, signs, delta, true);

    std::vector<double> errs;
    for (double t_p : {1e-2, 1e-3, 1e-4}) {
        auto out = run_interval_finite(h_r, pulse_hamiltonian(layer, signs, delta, t_p), interval, t_p, psi);
        double d = 0;
        for (std::size_t k = 0; k < out.dimension(); ++k) {
            d += std::norm(out[k] - ideal[k]);
        }
        errs.push_back(std::sqrt(d));
    }
    EXPECT_LT(errs[2], errs[1]);
    EXPECT_LT(errs[1], errs[0]);
    EXPECT_NEAR(errs[0] / errs[1], 10.0, 2.0);
    EXPECT_NEAR(errs[1] / errs[2], 10.0, 2.0);
}

TEST(sim, identity_schedule_is_free_evolution) {
    auto r = ResourceHamiltonian::power_law_chain(3, 1.0);
    TargetSpec t{3, {}};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            t.terms.push_back(TargetTerm::pauli(i, j, Pauli::X, Pauli::X, r.jx(i, j)));
            t.terms.push_back(TargetTerm::pauli(i, j, Pauli::Y, Pauli::Y, r.jy(i, j)));
        }
    }
    auto s = compile(t, r);
    auto psi = StateVector::haar_random(3, 4);
    auto out = run_schedule(s, r, 0.7, 1, {}, psi);
    auto want = evolve(resource_operator(r), 0.7, psi);
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_LT(std::abs(out[k] - want[k]), 1e-11);
    }
}

TEST(sim, two_qubit_schedule_matches_hand_product) {
    // x = [0, 0], y = [0, 1]: layers I I then I X; XX survives and YY averages out.
    auto r = ResourceHamiltonian::power_law_chain(2, 1.0);
    TargetSpec t{2, {TargetTerm::pauli(0, 1, Pauli::X, Pauli::X, r.jx(0, 1))}};
    auto s = compile(t, r);
    ASSERT_EQ(s.blocks.size(), 1u);
    double tau = 0.3;
    auto psi = StateVector::haar_random(2, 6);
    auto out = run_schedule(s, r, tau, 3, {}, psi);

    auto h = oracle::resource(r);
    oracle::Matrix step = oracle::Matrix::Identity(4, 4);
    for (const auto &layer : s.block_layers(0)) {
        auto p = oracle::layer_matrix(layer);
        step = p.adjoint() * oracle::expm_hermitian(h, tau / 2) * p * step;
    }
    oracle::Matrix u = step * step * step;
    EXPECT_LT(distance(out, u * oracle::to_vector(psi)), 1e-10);
}

// run_schedule against the dense product of every pulse and evolution.
TEST(sim, schedule_matches_dense_oracle) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 2 + trial % 3;
        auto r = ResourceHamiltonian::power_law_chain(n, 1.0 + 0.5 * (trial % 3));
        CompileOptions o{.trotter_order = 1 + trial % 2, .dd_guard = trial % 3 == 0};
        if (trial % 4 == 1) {
            o.robust = RobustnessPolicy{};
        }
        auto s = compile(random_target(n, rng), r, o);
        std::vector<double> delta;
        if (trial % 2 == 0) {
            for (int i = 0; i < n; ++i) {
                delta.push_back(u(rng));
            }
        }
        double tau = 0.2 + 0.05 * (trial % 5);
        auto cycles = s.round_cycles(3);
        auto psi = StateVector::haar_random(n, 1000 + trial);
        ErrorModel errors;
        errors.delta = delta;
        auto out = run_schedule(s, r, tau, cycles, errors, psi);
        oracle::Vector want = oracle::schedule_unitary(s, r, tau, cycles, delta) * oracle::to_vector(psi);
        EXPECT_LT(distance(out, want), 1e-10) << "trial " << trial;
        EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    }
}

TEST(sim, deformed_schedule_matches_dense_oracle) {
    auto r = ResourceHamiltonian::power_law_chain(3, 1.2);
    for (int p : {1, 2}) {
        auto s = compile(ising_chain_target(3), r, {.trotter_order = p, .dd_guard = true});
        s = robustify(s, {{}, FinitePulsePolicy{0.001, 0.5}});
        auto psi = StateVector::haar_random(3, 2);
        auto out = run_schedule(s, r, 0.5, s.round_cycles(1), {}, psi);
        oracle::Vector want = oracle::schedule_unitary(s, r, 0.5, s.round_cycles(1)) * oracle::to_vector(psi);
        EXPECT_LT(distance(out, want), 1e-10);
    }
}

TEST(sim, schedule_requires_full_sign_periods) {
    auto r = ResourceHamiltonian::power_law_chain(3, 1.2);
    auto s = compile(ising_chain_target(3), r, {.robust = RobustnessPolicy{}});
    ASSERT_GT(s.sign_period(), 1u);
    EXPECT_THROW(run_schedule(s, r, 0.1, s.sign_period() + 1, {}, StateVector(3)), std::invalid_argument);
    EXPECT_THROW(run_schedule(s, r, 0.1, 0, {}, StateVector(3)), std::invalid_argument);
}

TEST(sim, fields_enter_the_interval_hamiltonian) {
    auto r = ResourceHamiltonian::power_law_chain(2, 1.0);
    TargetSpec t{2, {TargetTerm::pauli(0, 1, Pauli::X, Pauli::X, r.jx(0, 1))}};
    auto s = compile(t, r);
    std::vector<LocalField> f{{0.3, 0.0, 0.1}, {0.0, -0.2, 0.4}};
    ErrorModel errors;
    errors.fields = f;
    auto psi = StateVector::haar_random(2, 5);
    auto out = run_schedule(s, r, 0.4, 2, errors, psi);
    oracle::Vector want = oracle::schedule_unitary(s, r.with_fields(f), 0.4, 2) * oracle::to_vector(psi);
    EXPECT_LT(distance(out, want), 1e-10);
}

TEST(sim, ising_chain_fidelity_improves_with_shorter_period) {
    const int n = 6;
    auto r = ResourceHamiltonian::power_law_chain(n, 3.0);
    auto s = compile(ising_chain_target(n), r);
    auto reference = cluster_reference(n);
    double previous = 1;
    for (double tau_over_n : {0.02, 0.01, 0.005}) {
        auto plan = plan_cycles(s, kPi / 4, tau_from_interval(s, tau_over_n));
        auto out = run_schedule(s, r, plan.tau, plan.cycles, {}, StateVector(n));
        double err = 1 - fidelity(out, reference);
        EXPECT_LT(err, previous);
        previous = err;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(sim, rotation_errors_are_sampled_in_range) {
    auto d = sample_rotation_errors(50, 0.01, 2.0, 9);
    ASSERT_EQ(d.size(), 50u);
    for (double v : d) {
        EXPECT_LE(std::abs(v), 0.04);
    }
    EXPECT_EQ(d, sample_rotation_errors(50, 0.01, 2.0, 9));
    EXPECT_NE(d, sample_rotation_errors(50, 0.01, 2.0, 10));
}

TEST(sim, measurement_examples) {
    auto [z, zero] = measure_qubit(StateVector(1), 0, Pauli::Z, 1);
    EXPECT_EQ(z, 1);

    auto plus = StateVector::from_amplitudes(1, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_EQ(measure_qubit(plus, 0, Pauli::X, seed).first, 1);
    }

    auto bell = StateVector::from_amplitudes(2, {1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)});
    int ups = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [a, collapsed] = measure_qubit(bell, 0, Pauli::Z, seed);
        auto [b, after] = measure_qubit(collapsed, 1, Pauli::Z, seed + 1000);
        EXPECT_EQ(a, b);
        EXPECT_NEAR(after.norm(), 1.0, 1e-12);
        ups += a == 1;
    }
    EXPECT_GT(ups, 60);
    EXPECT_LT(ups, 140);
    EXPECT_EQ(measure_qubit(bell, 0, Pauli::Z, 5).first, measure_qubit(bell, 0, Pauli::Z, 5).first);
}

TEST(sim, y_basis_measurement) {
    // |+i> = (|0> + i|1>)/sqrt(2) is the +1 eigenstate of Y.
    auto s = StateVector::from_amplitudes(1, {1 / std::sqrt(2.0), Amplitude(0, 1 / std::sqrt(2.0))});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(measure_qubit(s, 0, Pauli::Y, seed).first, 1);
    }
}

TEST(sim, state_vector_basics) {
    auto b = StateVector::basis(3, 5);
    EXPECT_EQ(b[5], Amplitude(1.0));
    EXPECT_DOUBLE_EQ(b.expectation(PauliString::from_text("Z__")), -1.0);
    EXPECT_DOUBLE_EQ(b.expectation(PauliString::from_text("_Z_")), 1.0);
    auto h = StateVector::haar_random(6, 3);
    EXPECT_NEAR(h.norm(), 1.0, 1e-12);
    EXPECT_THROW(StateVector::from_amplitudes(2, {1.0, 0.0}), std::invalid_argument);
}
