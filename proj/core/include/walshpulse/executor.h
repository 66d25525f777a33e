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

#ifndef WALSHPULSE_EXECUTOR_H
#define WALSHPULSE_EXECUTOR_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "walshpulse/evolve.h"
#include "walshpulse/resource.h"
#include "walshpulse/schedule.h"
#include "walshpulse/state_vector.h"

namespace walshpulse {

struct ErrorModel {
    /// Per-qubit rotation-angle offsets in radians; empty means none.
    std::vector<double> delta;
    /// Pulse duration; 0 is instantaneous.
    double t_p = 0;
    /// Per-qubit background fields added to H_R; empty means none.
    std::vector<LocalField> fields;
    std::uint64_t rng_seed = 0;
};

/// delta_i uniform on [-2 eps J, 2 eps J], fixed per trajectory.
std::vector<double> sample_rotation_errors(int n_qubits, double eps_ra, double j, std::uint64_t seed);

/// prod_i exp(-i s_i (pi + delta_i) [O]_i / 2). Empty signs mean +1, empty
/// delta means 0. `inverse` applies the exact inverse.
void apply_instant_layer(StateVector &psi, const PulseLayer &layer, std::span<const int> signs = {},
                         std::span<const double> delta = {}, bool inverse = false);

/// H_p = sum_i s_i (pi + delta_i) [O]_i / (2 t_p), so exp(-i t_p H_p) is the pulse.
PauliStringOperator pulse_hamiltonian(const PulseLayer &layer, std::span<const int> signs, std::span<const double> delta,
                                      double t_p);

/// exp(-i t_p (H_R - H_p)) exp(-i (interval - 2 t_p) H_R) exp(-i t_p (H_R + H_p)).
void run_interval_finite(StateVector &psi, const PauliStringOperator &h_r, const PauliStringOperator &h_p,
                         double interval, double t_p, Propagator &propagator);
StateVector run_interval_finite(const PauliStringOperator &h_r, const PauliStringOperator &h_p, double interval,
                                double t_p, StateVector psi, double tol = kDefaultEvolveTolerance);

/// Executes `cycles` repetitions of the schedule with base period tau.
/// Rotation errors hit every Pauli pulse, set pulses included; non-Pauli set
/// gates are ideal and instantaneous.
StateVector run_schedule(const PulseSchedule &schedule, const ResourceHamiltonian &resource, double tau,
                         std::uint64_t cycles, const ErrorModel &errors, StateVector psi0,
                         double tol = kDefaultEvolveTolerance);

struct CyclePlan {
    std::uint64_t cycles = 1;
    double tau = 0;
};

/// Cycle count nearest total_time / tau_nominal (at least one, rounded up to
/// the sign-schedule period) and the base period that makes it exact.
CyclePlan plan_cycles(const PulseSchedule &schedule, double total_time, double tau_nominal);

/// Base period for a given interval length tau / n, n being the longest Walsh
/// sequence of the schedule.
double tau_from_interval(const PulseSchedule &schedule, double tau_over_n);

/// Projective measurement; returns the +1/-1 outcome and the collapsed state.
std::pair<int, StateVector> measure_qubit(StateVector psi, int qubit, Pauli basis, std::uint64_t seed);

}  // namespace walshpulse

#endif
