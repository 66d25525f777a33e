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

#ifndef WALSHPULSE_METRICS_H
#define WALSHPULSE_METRICS_H

#include <span>
#include <vector>

#include "walshpulse/pauli_operator.h"
#include "walshpulse/state_vector.h"

namespace walshpulse {

/// |<phi|psi>| for normalized copies of both states.
double fidelity(const StateVector &psi, const StateVector &phi);

/// exp(-i T H)|0...0> with H = -j sum_i X_i X_{i+1} and T = pi / (4 j), built
/// directly from commuting two-qubit exponentials.
StateVector cluster_reference(int n_qubits, double j = 1.0);

/// <psi|O|psi> for operators that are a single Pauli string with coefficient 1.
std::vector<double> stabilizer_expectations(const StateVector &psi, std::span<const PauliStringOperator> stabilizers);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    std::size_t points = 0;
};

/// Least-squares line through (log x, log y). Points with non-positive
/// coordinates are dropped; fewer than two remaining points throw.
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace walshpulse

#endif
