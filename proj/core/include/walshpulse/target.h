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

#ifndef WALSHPULSE_TARGET_H
#define WALSHPULSE_TARGET_H

#include <vector>

#include "walshpulse/gates.h"

namespace walshpulse {

/// strength * (op_i . sigma_i)(op_j . sigma_j).
struct TargetTerm {
    int i = 0;
    int j = 1;
    Axis op_i = Axis::of(Pauli::X);
    Axis op_j = Axis::of(Pauli::X);
    double strength = 0;

    static TargetTerm pauli(int i, int j, Pauli a, Pauli b, double strength) {
        return TargetTerm{i, j, Axis::of(a), Axis::of(b), strength};
    }
};

struct TargetSpec {
    int n_qubits = 0;
    std::vector<TargetTerm> terms;

    /// Throws std::invalid_argument unless i < j < n, strengths are finite and
    /// operator axes have unit length.
    void validate() const;
};

/// -j sum_i X_i X_{i+1} on an open chain.
TargetSpec ising_chain_target(int n_qubits, double j = 1.0);

}  // namespace walshpulse

#endif
