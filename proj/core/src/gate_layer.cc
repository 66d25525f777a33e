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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "walshpulse/compiler.h"

namespace walshpulse {

GateLayerProgram gate_layer_to_target(int n_qubits, std::span<const TwoQubitRotation> layer, double j) {
    if (!(j > 0)) {
        throw std::invalid_argument("coupling scale must be positive");
    }
    GateLayerProgram out;
    out.target.n_qubits = n_qubits;
    std::vector<bool> used(n_qubits, false);
    double max_angle = 0;
    for (const auto &g : layer) {
        int a = std::min(g.i, g.j);
        int b = std::max(g.i, g.j);
        if (a < 0 || b >= n_qubits || a == b) {
            throw std::invalid_argument("two-qubit rotation on invalid pair");
        }
        if (used[a] || used[b]) {
            throw std::invalid_argument("two-qubit rotations in a layer must act on disjoint pairs");
        }
        if (g.axis == Pauli::I) {
            throw std::invalid_argument("two-qubit rotation needs a Pauli axis");
        }
        used[a] = used[b] = true;
        double angle = g.controlled ? std::numbers::pi / 2 : g.angle;
        max_angle = std::max(max_angle, std::abs(angle));
    }
    if (max_angle == 0) {
        return out;
    }
    // exp(i angle/2 OO) = exp(-i T H) with H = -(angle / 2T) OO.
    out.time = max_angle / (2 * j);
    for (const auto &g : layer) {
        double angle = g.controlled ? std::numbers::pi / 2 : g.angle;
        if (angle == 0) {
            continue;
        }
        int a = std::min(g.i, g.j);
        int b = std::max(g.i, g.j);
        out.target.terms.push_back(TargetTerm::pauli(a, b, g.axis, g.axis, -angle / (2 * out.time)));
        if (g.controlled) {
            auto local = SingleQubitGate::rotation(Axis::of(g.axis), std::numbers::pi / 2);
            out.local_rotations.push_back({a, local});
            out.local_rotations.push_back({b, local});
        }
    }
    return out;
}

}  // namespace walshpulse
