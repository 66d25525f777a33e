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

#ifndef WALSHPULSE_STATE_VECTOR_H
#define WALSHPULSE_STATE_VECTOR_H

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "walshpulse/gates.h"
#include "walshpulse/pauli_operator.h"

namespace walshpulse {

/// Pure state on n qubits. Qubit q is bit q of the basis index.
class StateVector {
   public:
    explicit StateVector(int n_qubits = 1);

    static StateVector basis(int n_qubits, std::uint64_t index);
    static StateVector from_amplitudes(int n_qubits, std::vector<Amplitude> amplitudes);
    /// Haar-random state from Gaussian amplitudes.
    static StateVector haar_random(int n_qubits, std::uint64_t seed);

    int n_qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude &operator[](std::size_t i) {
        return amps_[i];
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

    double norm() const;
    void normalize();
    /// <this|other>.
    Amplitude inner(const StateVector &other) const;

    /// Row-major 2x2 matrix on one qubit.
    void apply_matrix(int qubit, const std::array<Amplitude, 4> &m);
    void apply_gate(int qubit, const SingleQubitGate &gate);
    void apply_pauli_string(const PauliString &p);
    /// exp(-i angle/2 P) for a Pauli string P.
    void apply_pauli_rotation(const PauliString &p, double angle);

    /// Projective measurement of one qubit in the eigenbasis of X, Y or Z.
    /// Returns the +1/-1 outcome and collapses the state.
    int measure(int qubit, Pauli basis, std::uint64_t seed);
    /// <P> for a Pauli string.
    double expectation(const PauliString &p) const;

   private:
    int n_;
    std::vector<Amplitude> amps_;
};

}  // namespace walshpulse

#endif
