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

#ifndef WALSHPULSE_MAXCUT_H
#define WALSHPULSE_MAXCUT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "walshpulse/compiler.h"
#include "walshpulse/graphdecomp.h"
#include "walshpulse/resource.h"
#include "walshpulse/state_vector.h"

namespace walshpulse {

/// Names of the built-in test graphs ("g6", "g10"). Both have maximum degree
/// 3 and a maximum cut that is unique up to flipping every spin.
std::vector<std::string> registry_graph_names();
WeightedGraph registry_graph(std::string_view name);

/// H = j sum_{i<j} G_ij X_i X_j.
TargetSpec maxcut_target(const WeightedGraph &graph, double j = 1.0);

/// Classical energy of X-basis configuration s (bit i set means X_i = -1).
double maxcut_configuration_energy(const WeightedGraph &graph, std::uint64_t s, double j = 1.0);

struct MaxCutGround {
    double energy = 0;
    std::vector<std::uint64_t> configurations;
};

/// Exhaustive search over all 2^N configurations.
MaxCutGround maxcut_ground(const WeightedGraph &graph, double j = 1.0);

struct EnergyGap {
    double energy = 0;
    double gap = 0;
};

EnergyGap maxcut_energy_gap(const StateVector &psi, const WeightedGraph &graph, double j = 1.0);

/// |<s|psi>|^2 for every X-basis configuration s.
std::vector<double> x_basis_probabilities(const StateVector &psi);

/// Digitized annealing from |0...0> with H_0 = -sum_i Z_i. Step k runs k
/// Walsh cycles of period tau (time k tau of the target) and then
/// exp(-i (K - k) tau H_0) as global Z rotations.
StateVector dqa_run(const WeightedGraph &graph, const ResourceHamiltonian &resource, int k_steps, double tau,
                    double j = 1.0, const CompileOptions &options = {});

}  // namespace walshpulse

#endif
