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

#include "walshpulse/surface7.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "walshpulse/executor.h"
#include "walshpulse/metrics.h"

namespace walshpulse {

namespace {

constexpr int kQubits = 7;

TwoQubitRotation controlled(int ancilla, int data, Pauli axis) {
    TwoQubitRotation g;
    g.i = ancilla;
    g.j = data;
    g.axis = axis;
    g.controlled = true;
    return g;
}

PauliStringOperator stabilizer(std::initializer_list<int> qubits, Pauli p) {
    PauliString s;
    for (int q : qubits) {
        s.set(q, p);
    }
    PauliStringOperator op(kQubits);
    op.add(1.0, s);
    return op;
}

}  // namespace

Surface7Geometry parse_surface7_geometry(std::string_view name) {
    if (name == "grid_2d" || name == "grid") {
        return Surface7Geometry::Grid2D;
    }
    if (name == "chain_1d" || name == "chain") {
        return Surface7Geometry::Chain1D;
    }
    throw std::invalid_argument("unknown surface-code geometry '" + std::string(name) + "'");
}

Surface7Setup surface7_setup(Surface7Geometry geometry, double alpha, double j) {
    const auto [d0, d1, d2, d3] = Surface7Setup::kData;
    const int x1 = Surface7Setup::kAncillaX1;
    const int y = Surface7Setup::kAncillaY;
    const int x2 = Surface7Setup::kAncillaX2;

    Surface7Setup s;
    if (geometry == Surface7Geometry::Grid2D) {
        // Data on the corners of a square, Y ancilla in the middle, X ancillas
        // above and below; every gate pair sits at unit distance.
        const double h = 1 / std::sqrt(2.0);
        std::vector<std::array<double, 2>> pos(kQubits);
        pos[d0] = {0, 0};
        pos[d1] = {2 * h, 0};
        pos[d2] = {0, 2 * h};
        pos[d3] = {2 * h, 2 * h};
        pos[y] = {h, h};
        pos[x1] = {h, -h};
        pos[x2] = {h, 3 * h};
        s.resource = ResourceHamiltonian::power_law(pos, alpha, j);
    } else {
        s.resource = ResourceHamiltonian::power_law_chain(kQubits, alpha, j);
    }
    // Each X ancilla meets both of its data qubits on the same side of the Y
    // ancilla's gates, so the checks do not disturb each other.
    s.layers = {
        {controlled(y, d0, Pauli::Y), controlled(x2, d2, Pauli::X)},
        {controlled(y, d1, Pauli::Y), controlled(x1, d0, Pauli::X), controlled(x2, d3, Pauli::X)},
        {controlled(y, d2, Pauli::Y), controlled(x1, d1, Pauli::X)},
        {controlled(y, d3, Pauli::Y)},
    };
    s.stabilizers = {stabilizer({d0, d1}, Pauli::X), stabilizer({d2, d3}, Pauli::X),
                     stabilizer({d0, d1, d2, d3}, Pauli::Y)};
    return s;
}

Surface7Program surface7_compile(const Surface7Setup &setup, int trotter_order) {
    Surface7Program out;
    CompileOptions options;
    options.trotter_order = trotter_order;
    for (const auto &layer : setup.layers) {
        auto program = gate_layer_to_target(kQubits, layer, 1.0);
        auto schedule = compile(program.target, setup.resource, options);
        out.walsh_sequences += schedule.blocks.size();
        out.programs.push_back(std::move(program));
        out.schedules.push_back(std::move(schedule));
    }
    return out;
}

Surface7Result surface7_run(Surface7Geometry geometry, double alpha, double tau_over_n, std::uint64_t seed,
                            int n_states, int trotter_order) {
    if (!(tau_over_n > 0) || n_states < 1) {
        throw std::invalid_argument("surface-code run needs tau/n > 0 and at least one state");
    }
    Surface7Setup setup = surface7_setup(geometry, alpha);
    Surface7Program program = surface7_compile(setup, trotter_order);
    std::vector<CyclePlan> plans;
    for (std::size_t l = 0; l < program.schedules.size(); l++) {
        plans.push_back(plan_cycles(program.schedules[l], program.programs[l].time,
                                    tau_from_interval(program.schedules[l], tau_over_n)));
    }

    Surface7Result result;
    result.walsh_sequences = program.walsh_sequences;
    std::mt19937_64 seeds(seed);
    double error_sum = 0;
    for (int s = 0; s < n_states; s++) {
        StateVector data = StateVector::haar_random(4, seeds());
        StateVector psi(kQubits);
        psi[0] = 0;
        for (std::size_t b = 0; b < data.dimension(); b++) {
            std::size_t full = 0;
            for (int k = 0; k < 4; k++) {
                if ((b >> k) & 1) {
                    full |= std::size_t{1} << Surface7Setup::kData[k];
                }
            }
            psi[full] = data[b];
        }
        for (std::size_t l = 0; l < program.schedules.size(); l++) {
            psi = run_schedule(program.schedules[l], setup.resource, plans[l].tau, plans[l].cycles, {}, std::move(psi));
            for (const auto &r : program.programs[l].local_rotations) {
                psi.apply_gate(r.qubit, r.gate);
            }
        }
        for (int a : {Surface7Setup::kAncillaX1, Surface7Setup::kAncillaY, Surface7Setup::kAncillaX2}) {
            psi.measure(a, Pauli::Z, seeds());
        }
        auto values = stabilizer_expectations(psi, setup.stabilizers);
        result.expectations.push_back({values[0], values[1], values[2]});
        for (double v : values) {
            error_sum += 1 - std::abs(v);
        }
    }
    result.mean_error = error_sum / (3.0 * n_states);
    return result;
}

}  // namespace walshpulse
