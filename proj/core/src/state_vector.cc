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

#include "walshpulse/state_vector.h"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace walshpulse {

namespace {

void check_qubits(int n) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("state qubit count must be in [1, 30]");
    }
}

const Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
    check_qubits(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dimension()) {
        throw std::invalid_argument("basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Amplitude> amplitudes) {
    StateVector s(n_qubits);
    if (amplitudes.size() != s.dimension()) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::haar_random(int n_qubits, std::uint64_t seed) {
    StateVector s(n_qubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (auto &a : s.amps_) {
        double re = g(rng);
        double im = g(rng);
        a = {re, im};
    }
    s.normalize();
    return s;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::normalize() {
    double nrm = norm();
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite state");
    }
    for (auto &a : amps_) {
        a /= nrm;
    }
}

Amplitude StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("inner product of states on different qubit counts");
    }
    Amplitude acc{0, 0};
    for (std::size_t b = 0; b < amps_.size(); b++) {
        acc += std::conj(amps_[b]) * other.amps_[b];
    }
    return acc;
}

void StateVector::apply_matrix(int qubit, const std::array<Amplitude, 4> &m) {
    if (qubit < 0 || qubit >= n_) {
        throw std::invalid_argument("gate qubit out of range");
    }
    std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            continue;
        }
        Amplitude a0 = amps_[b];
        Amplitude a1 = amps_[b | bit];
        amps_[b] = m[0] * a0 + m[1] * a1;
        amps_[b | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_gate(int qubit, const SingleQubitGate &gate) {
    apply_matrix(qubit, gate.matrix());
}

void StateVector::apply_pauli_string(const PauliString &p) {
    std::vector<Amplitude> out(amps_.size());
    Amplitude phase = kIPow[std::popcount(p.x & p.z) & 3];
    for (std::size_t b = 0; b < amps_.size(); b++) {
        Amplitude v = phase * amps_[b];
        out[b ^ p.x] = (std::popcount(b & p.z) & 1) ? -v : v;
    }
    amps_ = std::move(out);
}

void StateVector::apply_pauli_rotation(const PauliString &p, double angle) {
    StateVector rotated = *this;
    rotated.apply_pauli_string(p);
    double c = std::cos(angle / 2);
    Amplitude s{0, -std::sin(angle / 2)};
    for (std::size_t b = 0; b < amps_.size(); b++) {
        amps_[b] = c * amps_[b] + s * rotated.amps_[b];
    }
}

double StateVector::expectation(const PauliString &p) const {
    StateVector rotated = *this;
    rotated.apply_pauli_string(p);
    return inner(rotated).real();
}

int StateVector::measure(int qubit, Pauli basis, std::uint64_t seed) {
    if (basis == Pauli::I) {
        throw std::invalid_argument("measurement basis must be X, Y or Z");
    }
    if (qubit < 0 || qubit >= n_) {
        throw std::invalid_argument("measured qubit out of range");
    }
    // Projectors (1 +- O)/2 applied directly.
    StateVector flipped = *this;
    flipped.apply_pauli_string(PauliString::single(basis, qubit));
    std::vector<Amplitude> plus(amps_.size());
    double p_plus = 0;
    for (std::size_t b = 0; b < amps_.size(); b++) {
        plus[b] = 0.5 * (amps_[b] + flipped.amps_[b]);
        p_plus += std::norm(plus[b]);
    }
    double total = norm();
    total *= total;
    std::mt19937_64 rng(seed);
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    int outcome = u < p_plus ? 1 : -1;
    if (outcome == 1) {
        amps_ = std::move(plus);
    } else {
        for (std::size_t b = 0; b < amps_.size(); b++) {
            amps_[b] = 0.5 * (amps_[b] - flipped.amps_[b]);
        }
    }
    normalize();
    return outcome;
}

}  // namespace walshpulse
