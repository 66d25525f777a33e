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

#ifndef WALSHPULSE_COMPILER_H
#define WALSHPULSE_COMPILER_H

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "walshpulse/errors.h"
#include "walshpulse/graphdecomp.h"
#include "walshpulse/resource.h"
#include "walshpulse/schedule.h"
#include "walshpulse/target.h"

namespace walshpulse {

enum class DecompositionStrategy { Greedy, HamiltonPath };

/// Couplings beyond lambda_r (in chain index units) are neglected, so Walsh
/// indices may repeat on qubits farther apart than lambda_r.
struct CutoffConfig {
    int lambda_r = 0;
};

struct FinitePulsePolicy {
    double t_p = 0;
    /// Base period tau the deformation is computed for.
    double tau = 0;
};

struct RobustnessPolicy {
    /// Sign-schedule indices; empty selects e_i = i + 1.
    std::vector<std::uint32_t> e_indices;
    std::optional<FinitePulsePolicy> finite_pulse;
};

struct CompileOptions {
    int trotter_order = 1;
    std::optional<CutoffConfig> cutoff;
    bool dd_guard = false;
    /// Implies dd_guard.
    std::optional<RobustnessPolicy> robust;
    DecompositionStrategy strategy = DecompositionStrategy::Greedy;
};

/// g^O_ij = target / resource coupling for XX (channel X) and YY (channel Y)
/// terms. Other operator pairs are rejected; compile() handles them.
std::pair<WeightedGraph, WeightedGraph> rescaling_graph(const TargetSpec &target, const ResourceHamiltonian &resource);

/// x_i == x_j exactly for pairs of x_matching, all other x distinct; same for y.
WalshAssignment assign_indices(const Matching &x_matching, const Matching &y_matching, int n_qubits);

/// Chain version that only keeps indices distinct within distance lambda_r.
/// Every index is at most lambda_r.
WalshAssignment assign_indices_with_cutoff(
    const Matching &x_matching, const Matching &y_matching, int n_qubits, CutoffConfig cutoff);

/// Group-label form of the two functions above: qubits sharing a label share
/// an index. Labels < 0 mark ungrouped qubits.
WalshAssignment assign_groups(
    std::span<const int> x_groups, std::span<const int> y_groups, std::optional<CutoffConfig> cutoff = std::nullopt);

/// Shifts indices so that x_i != 0, y_i != 0 and x_i != y_i for every qubit,
/// keeping the equality pattern inside each channel.
WalshAssignment dd_guard(const WalshAssignment &assignment);

PulseSchedule compile(const TargetSpec &target, const ResourceHamiltonian &resource, const CompileOptions &options = {});

/// Installs the sign schedule and, with a finite-pulse policy, the
/// identity-interval shrink and time rescale.
PulseSchedule robustify(PulseSchedule schedule, const RobustnessPolicy &policy);

/// Two-qubit rotation exp(i angle/2 O (x) O) on (i, j), or the controlled form
/// C_OO = R_OO^{pi/2} (R_O^{pi/2} (x) R_O^{pi/2}) with R_O^{pi/2} = exp(-i O pi/4).
struct TwoQubitRotation {
    int i = 0;
    int j = 1;
    Pauli axis = Pauli::X;
    double angle = 0;
    bool controlled = false;
};

struct LocalRotation {
    int qubit = 0;
    SingleQubitGate gate;
};

/// Hamiltonian evolution realizing a layer of disjoint two-qubit rotations.
/// The local rotations commute with the evolution and are applied alongside it.
struct GateLayerProgram {
    TargetSpec target;
    double time = 0;
    std::vector<LocalRotation> local_rotations;
};

GateLayerProgram gate_layer_to_target(int n_qubits, std::span<const TwoQubitRotation> layer, double j = 1.0);

}  // namespace walshpulse

#endif
