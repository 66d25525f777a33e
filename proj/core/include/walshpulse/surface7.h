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

#ifndef WALSHPULSE_SURFACE7_H
#define WALSHPULSE_SURFACE7_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "walshpulse/compiler.h"
#include "walshpulse/pauli_operator.h"

namespace walshpulse {

enum class Surface7Geometry { Grid2D, Chain1D };

Surface7Geometry parse_surface7_geometry(std::string_view name);

/// Four data qubits, two X-check ancillas and one Y-check ancilla. Qubit
/// indices follow the chain order d0 X1 d1 Y d2 X2 d3 in both geometries.
struct Surface7Setup {
    static constexpr std::array<int, 4> kData = {0, 2, 4, 6};
    static constexpr int kAncillaX1 = 1;
    static constexpr int kAncillaY = 3;
    static constexpr int kAncillaX2 = 5;

    ResourceHamiltonian resource;
    /// Four layers of controlled XX / YY rotations between ancillas and data.
    std::vector<std::vector<TwoQubitRotation>> layers;
    /// X_d0 X_d1, X_d2 X_d3, Y_d0 Y_d1 Y_d2 Y_d3.
    std::vector<PauliStringOperator> stabilizers;
};

Surface7Setup surface7_setup(Surface7Geometry geometry, double alpha, double j = 1.0);

struct Surface7Program {
    std::vector<GateLayerProgram> programs;
    std::vector<PulseSchedule> schedules;
    /// Walsh sequences over all four layers.
    std::size_t walsh_sequences = 0;
};

Surface7Program surface7_compile(const Surface7Setup &setup, int trotter_order = 2);

struct Surface7Result {
    /// One row of three stabilizer expectations per initial state.
    std::vector<std::array<double, 3>> expectations;
    /// Mean of 1 - |<O>| over states and stabilizers.
    double mean_error = 0;
    std::size_t walsh_sequences = 0;
};

/// Runs the circuit on `n_states` Haar-random data states (ancillas in |0>),
/// measures the ancillas in Z and reports the post-measurement stabilizers.
Surface7Result surface7_run(Surface7Geometry geometry, double alpha, double tau_over_n, std::uint64_t seed,
                            int n_states = 64, int trotter_order = 2);

}  // namespace walshpulse

#endif
