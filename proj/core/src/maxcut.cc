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

#include "walshpulse/maxcut.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "walshpulse/executor.h"
#include "walshpulse/pauli_operator.h"

namespace walshpulse {

namespace {

WeightedGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    WeightedGraph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v, 1.0);
    }
    return g;
}

}  // namespace

std::vector<std::string> registry_graph_names() {
    return {"g6", "g10"};
}

WeightedGraph registry_graph(std::string_view name) {
    if (name == "g6") {
        // Hexagon with two chords; frustrated, best cut leaves 2 of 8 edges uncut.
        return from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}, {1, 5}});
    }
    if (name == "g10") {
        return from_edges(10, {{0, 5}, {0, 6}, {0, 7}, {1, 9}, {2, 6}, {2, 7}, {2, 9}, {3, 4}, {3, 7}, {3, 8}, {4, 6},
                               {4, 8}, {5, 8}, {5, 9}});
    }
    throw std::invalid_argument("unknown registry graph '" + std::string(name) + "'");
}

TargetSpec maxcut_target(const WeightedGraph &graph, double j) {
    TargetSpec t;
    t.n_qubits = graph.n_vertices();
    for (const auto &e : graph.edges()) {
        t.terms.push_back(TargetTerm::pauli(e.u, e.v, Pauli::X, Pauli::X, j * e.weight));
    }
    return t;
}

double maxcut_configuration_energy(const WeightedGraph &graph, std::uint64_t s, double j) {
    double e = 0;
    for (const auto &edge : graph.edges()) {
        bool same = ((s >> edge.u) & 1) == ((s >> edge.v) & 1);
        e += same ? edge.weight : -edge.weight;
    }
    return j * e;
}

MaxCutGround maxcut_ground(const WeightedGraph &graph, double j) {
    int n = graph.n_vertices();
    if (n < 1 || n > 30) {
        throw std::invalid_argument("brute-force ground search needs 1 <= N <= 30");
    }
    MaxCutGround g;
    g.energy = INFINITY;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); s++) {
        double e = maxcut_configuration_energy(graph, s, j);
        if (e < g.energy - 1e-9) {
            g.energy = e;
            g.configurations = {s};
        } else if (std::abs(e - g.energy) <= 1e-9) {
            g.configurations.push_back(s);
        }
    }
    return g;
}

EnergyGap maxcut_energy_gap(const StateVector &psi, const WeightedGraph &graph, double j) {
    if (psi.n_qubits() != graph.n_vertices()) {
        throw std::invalid_argument("state and graph sizes differ");
    }
    auto h = target_operator(maxcut_target(graph, j));
    StateVector normalized = psi;
    normalized.normalize();
    EnergyGap out;
    out.energy = h.expectation(normalized.amplitudes());
    out.gap = out.energy - maxcut_ground(graph, j).energy;
    return out;
}

std::vector<double> x_basis_probabilities(const StateVector &psi) {
    StateVector rotated = psi;
    rotated.normalize();
    for (int q = 0; q < rotated.n_qubits(); q++) {
        rotated.apply_gate(q, SingleQubitGate::hadamard());
    }
    std::vector<double> p(rotated.dimension());
    for (std::size_t b = 0; b < p.size(); b++) {
        p[b] = std::norm(rotated[b]);
    }
    return p;
}

StateVector dqa_run(const WeightedGraph &graph, const ResourceHamiltonian &resource, int k_steps, double tau, double j,
                    const CompileOptions &options) {
    if (k_steps < 1 || !(tau > 0)) {
        throw std::invalid_argument("annealing needs K >= 1 and tau > 0");
    }
    int n = graph.n_vertices();
    PulseSchedule schedule = compile(maxcut_target(graph, j), resource, options);
    StateVector psi(n);
    for (int k = 1; k <= k_steps; k++) {
        psi = run_schedule(schedule, resource, tau, static_cast<std::uint64_t>(k), {}, std::move(psi));
        // exp(-i t H_0) with H_0 = -sum Z is a Z rotation by -2t on every qubit.
        double t = (k_steps - k) * tau;
        if (t > 0) {
            auto rz = SingleQubitGate::rotation(Axis::of(Pauli::Z), -2 * t);
            for (int q = 0; q < n; q++) {
                psi.apply_gate(q, rz);
            }
        }
    }
    return psi;
}

}  // namespace walshpulse
