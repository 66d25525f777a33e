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

#include "walshpulse/target.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace walshpulse {

void TargetSpec::validate() const {
    if (n_qubits <= 0) {
        throw std::invalid_argument("target needs a positive qubit count");
    }
    for (const auto &t : terms) {
        if (t.i < 0 || t.j >= n_qubits || t.i >= t.j) {
            throw std::invalid_argument(
                "target term on (" + std::to_string(t.i) + "," + std::to_string(t.j) + ") needs 0 <= i < j < N");
        }
        if (!std::isfinite(t.strength)) {
            throw std::invalid_argument("target term strength must be finite");
        }
        for (const Axis *a : {&t.op_i, &t.op_j}) {
            if (std::abs(a->norm() - 1) > 1e-9) {
                throw std::invalid_argument("target operator axes must be unit vectors");
            }
        }
    }
}

TargetSpec ising_chain_target(int n_qubits, double j) {
    TargetSpec t{n_qubits, {}};
    for (int i = 0; i + 1 < n_qubits; i++) {
        t.terms.push_back(TargetTerm::pauli(i, i + 1, Pauli::X, Pauli::X, -j));
    }
    return t;
}

}  // namespace walshpulse
