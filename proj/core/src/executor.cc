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

#include "walshpulse/executor.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "walshpulse/pauli_operator.h"

namespace walshpulse {

namespace {

int sign_at(std::span<const int> signs, int i) {
    return signs.empty() ? 1 : signs[i];
}

double delta_at(std::span<const double> delta, int i) {
    return delta.empty() ? 0.0 : delta[i];
}

void check_layer_args(std::size_t n, std::span<const int> signs, std::span<const double> delta) {
    if (!signs.empty() && signs.size() != n) {
        throw std::invalid_argument("need one sign per qubit");
    }
    if (!delta.empty() && delta.size() != n) {
        throw std::invalid_argument("need one rotation error per qubit");
    }
}

bool is_identity_layer(const PulseLayer &layer) {
    for (Pauli p : layer) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

void apply_set(StateVector &psi, const std::vector<SingleQubitGate> &gates, const std::vector<SingleQubitGate> &post,
               std::span<const int> signs, std::span<const double> delta, bool pre) {
    for (int i = 0; i < psi.n_qubits(); i++) {
        const auto &g = gates[i];
        if (g.is_identity()) {
            continue;
        }
        // A Pauli frame change is a physical pi pulse; the pre pulse is the
        // exact inverse of the post pulse so that errors enter as a frame tilt.
        if (auto p = post[i].as_pauli()) {
            double angle = sign_at(signs, i) * (std::numbers::pi + delta_at(delta, i));
            psi.apply_gate(i, SingleQubitGate::rotation(Axis::of(*p), pre ? -angle : angle));
        } else {
            psi.apply_gate(i, g);
        }
    }
}

}  // namespace

std::vector<double> sample_rotation_errors(int n_qubits, double eps_ra, double j, std::uint64_t seed) {
    if (n_qubits < 0 || !(eps_ra >= 0) || !(j > 0)) {
        throw std::invalid_argument("rotation errors need eps >= 0 and J > 0");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2 * eps_ra * j, 2 * eps_ra * j);
    std::vector<double> delta(n_qubits);
    for (auto &d : delta) {
        d = u(rng);
    }
    return delta;
}

void apply_instant_layer(StateVector &psi, const PulseLayer &layer, std::span<const int> signs,
                         std::span<const double> delta, bool inverse) {
    if (layer.size() != static_cast<std::size_t>(psi.n_qubits())) {
        throw std::invalid_argument("pulse layer size does not match the state");
    }
    check_layer_args(layer.size(), signs, delta);
    for (int i = 0; i < psi.n_qubits(); i++) {
        if (layer[i] == Pauli::I) {
            continue;
        }
        double angle = sign_at(signs, i) * (std::numbers::pi + delta_at(delta, i));
        psi.apply_gate(i, SingleQubitGate::rotation(Axis::of(layer[i]), inverse ? -angle : angle));
    }
}

PauliStringOperator pulse_hamiltonian(const PulseLayer &layer, std::span<const int> signs, std::span<const double> delta,
                                      double t_p) {
    if (!(t_p > 0)) {
        throw std::invalid_argument("pulse Hamiltonian needs t_p > 0");
    }
    check_layer_args(layer.size(), signs, delta);
    PauliStringOperator h(static_cast<int>(layer.size()));
    for (std::size_t i = 0; i < layer.size(); i++) {
        if (layer[i] == Pauli::I) {
            continue;
        }
        int q = static_cast<int>(i);
        h.add(sign_at(signs, q) * (std::numbers::pi + delta_at(delta, q)) / (2 * t_p), PauliString::single(layer[i], q));
    }
    return h;
}

void run_interval_finite(StateVector &psi, const PauliStringOperator &h_r, const PauliStringOperator &h_p,
                         double interval, double t_p, Propagator &propagator) {
    if (!(t_p >= 0)) {
        throw std::invalid_argument("pulse duration must be non-negative");
    }
    if (!(interval > 2 * t_p)) {
        throw std::invalid_argument("interval " + std::to_string(interval) + " is not longer than two pulses of " +
                                    std::to_string(t_p));
    }
    if (t_p == 0) {
        propagator.apply(h_r, interval, psi);
        return;
    }
    propagator.apply(h_r + h_p, t_p, psi);
    propagator.apply(h_r, interval - 2 * t_p, psi);
    propagator.apply(h_r + h_p * -1.0, t_p, psi);
}

StateVector run_interval_finite(const PauliStringOperator &h_r, const PauliStringOperator &h_p, double interval,
                                double t_p, StateVector psi, double tol) {
    Propagator propagator(tol);
    run_interval_finite(psi, h_r, h_p, interval, t_p, propagator);
    return psi;
}

StateVector run_schedule(const PulseSchedule &schedule, const ResourceHamiltonian &resource, double tau,
                         std::uint64_t cycles, const ErrorModel &errors, StateVector psi0, double tol) {
    schedule.validate();
    int n = schedule.n_qubits;
    if (resource.n_qubits() != n || psi0.n_qubits() != n) {
        throw std::invalid_argument("schedule, resource and state qubit counts differ");
    }
    if (!(tau > 0) || cycles < 1) {
        throw std::invalid_argument("run_schedule needs tau > 0 and at least one cycle");
    }
    if (cycles % schedule.sign_period() != 0) {
        throw std::invalid_argument("cycle count must be a multiple of the sign-schedule period");
    }
    if (!(errors.t_p >= 0)) {
        throw std::invalid_argument("pulse duration must be non-negative");
    }
    check_layer_args(static_cast<std::size_t>(n), {}, errors.delta);

    PauliStringOperator h_r = resource_operator(resource, errors.fields);
    Propagator propagator(tol);
    std::vector<std::vector<PulseLayer>> layers;
    for (std::size_t b = 0; b < schedule.blocks.size(); b++) {
        layers.push_back(schedule.block_layers(b));
    }
    auto order = schedule.execution_order();
    double shrink = schedule.fp_deformation ? schedule.fp_deformation->shrink : 0.0;
    std::vector<int> signs(n, 1);

    for (std::uint64_t l = 0; l < cycles; l++) {
        for (int i = 0; i < n; i++) {
            signs[i] = schedule.sign(i, l);
        }
        for (auto [b, factor] : order) {
            const auto &block = schedule.blocks[b];
            const auto &block_layers = layers[b];
            double period = factor * block.c * tau;
            apply_set(psi0, block.set_pre, block.set_post, signs, errors.delta, true);
            for (std::size_t k = 0; k < block_layers.size(); k++) {
                double dt = block.interval_durations[k] * period;
                if (shrink > 0) {
                    if (schedule.trotter_order == 2) {
                        if (k == 0 || k + 1 == block_layers.size()) {
                            dt -= period * shrink / 2;
                        }
                    } else if (k == 0) {
                        dt -= period * shrink;
                    }
                }
                const auto &layer = block_layers[k];
                if (is_identity_layer(layer)) {
                    propagator.apply(h_r, dt, psi0);
                } else if (errors.t_p == 0) {
                    apply_instant_layer(psi0, layer, signs, errors.delta);
                    propagator.apply(h_r, dt, psi0);
                    apply_instant_layer(psi0, layer, signs, errors.delta, true);
                } else {
                    run_interval_finite(psi0, h_r, pulse_hamiltonian(layer, signs, errors.delta, errors.t_p), dt,
                                        errors.t_p, propagator);
                }
            }
            apply_set(psi0, block.set_post, block.set_post, signs, errors.delta, false);
        }
    }
    return psi0;
}

CyclePlan plan_cycles(const PulseSchedule &schedule, double total_time, double tau_nominal) {
    if (!(total_time > 0) || !(tau_nominal > 0)) {
        throw std::invalid_argument("cycle planning needs positive total time and period");
    }
    double ratio = std::round(total_time / tau_nominal);
    if (ratio > 1e12) {
        throw std::invalid_argument("too many cycles requested");
    }
    auto cycles = static_cast<std::uint64_t>(std::max(1.0, ratio));
    cycles = schedule.round_cycles(cycles);
    return {cycles, total_time / static_cast<double>(cycles)};
}

double tau_from_interval(const PulseSchedule &schedule, double tau_over_n) {
    std::uint32_t n = 1;
    for (const auto &b : schedule.blocks) {
        n = std::max(n, sequence_length(b.assignment));
    }
    return tau_over_n * n;
}

std::pair<int, StateVector> measure_qubit(StateVector psi, int qubit, Pauli basis, std::uint64_t seed) {
    int outcome = psi.measure(qubit, basis, seed);
    return {outcome, std::move(psi)};
}

}  // namespace walshpulse
