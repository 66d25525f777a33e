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

#ifndef WALSHPULSE_TESTS_DENSE_ORACLE_H
#define WALSHPULSE_TESTS_DENSE_ORACLE_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "walshpulse/executor.h"
#include "walshpulse/gates.h"
#include "walshpulse/resource.h"
#include "walshpulse/schedule.h"
#include "walshpulse/state_vector.h"
#include "walshpulse/target.h"

// Dense 2^N matrices built from Kronecker products, kept independent of the
// library's matrix-free kernels so they can serve as oracles.
namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix pauli_matrix(walshpulse::Pauli p);
/// Single-qubit operator `m` on qubit q of n (qubit q is bit q).
Matrix embed(const Matrix &m, int qubit, int n);
Matrix axis_matrix(const walshpulse::Axis &a);
/// U = w I - i (x X + y Y + z Z).
Matrix gate_matrix(const walshpulse::SingleQubitGate &g);
Matrix layer_matrix(const walshpulse::PulseLayer &layer);
Matrix set_matrix(const std::vector<walshpulse::SingleQubitGate> &gates);

Matrix resource(const walshpulse::ResourceHamiltonian &r);
Matrix target(const walshpulse::TargetSpec &t);
Matrix fields(int n, const std::vector<walshpulse::LocalField> &f);

/// sum_(b, f) f c_b S_b (sum_k d_k P_k^dagger H P_k) S_b^dagger over the
/// executed blocks.
Matrix average_hamiltonian(const walshpulse::PulseSchedule &s, const Matrix &h);

/// First-order rotation-error generator of cycle l.
Matrix rotation_error_generator(const walshpulse::PulseSchedule &s, const Matrix &h, const std::vector<double> &delta,
                                std::uint64_t cycle);

/// exp(-i t H) by Hermitian eigendecomposition.
Matrix expm_hermitian(const Matrix &h, double t);

/// Dense product of every pulse and free evolution run_schedule performs with
/// instantaneous pulses.
Matrix schedule_unitary(const walshpulse::PulseSchedule &s, const walshpulse::ResourceHamiltonian &r, double tau,
                        std::uint64_t cycles, const std::vector<double> &delta = {});

Vector to_vector(const walshpulse::StateVector &psi);

double max_abs(const Matrix &m);

}  // namespace oracle

#endif
