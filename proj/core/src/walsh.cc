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

#include "walshpulse/walsh.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace walshpulse {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
}

SignSequence hadamard_row(std::uint32_t index, std::uint32_t size) {
    if (!is_power_of_two(size)) {
        throw std::invalid_argument("Hadamard order must be a power of two, got " + std::to_string(size));
    }
    if (index >= size) {
        throw std::invalid_argument(
            "Hadamard row " + std::to_string(index) + " out of range for order " + std::to_string(size));
    }
    // H_q = H_1 (x) H_{q-1}: peel the leading bit of the row index and repeat the
    // shorter row either twice or with its second copy negated.
    std::vector<std::int8_t> row{1};
    for (std::uint32_t block = 1; block < size; block <<= 1) {
        bool negate_second = (index & block) != 0;
        std::size_t old = row.size();
        row.resize(2 * old);
        for (std::size_t k = 0; k < old; k++) {
            row[old + k] = negate_second ? static_cast<std::int8_t>(-row[k]) : row[k];
        }
    }
    return SignSequence{index, std::move(row)};
}

double walsh_inner(const SignSequence &a, const SignSequence &b) {
    if (a.length() != b.length()) {
        throw std::invalid_argument(
            "Walsh inner product of sequences with lengths " + std::to_string(a.length()) + " and " +
            std::to_string(b.length()));
    }
    if (a.length() == 0) {
        throw std::invalid_argument("Walsh inner product of empty sequences");
    }
    long long acc = 0;
    for (std::size_t k = 0; k < a.length(); k++) {
        acc += a.values[k] * b.values[k];
    }
    return static_cast<double>(acc) / static_cast<double>(a.length());
}

void validate_assignment(const WalshAssignment &assignment) {
    if (assignment.x.size() != assignment.y.size()) {
        throw std::invalid_argument("Walsh assignment has mismatched x and y lengths");
    }
    if (assignment.x.empty()) {
        throw std::invalid_argument("Walsh assignment needs at least one qubit");
    }
}

std::uint32_t sequence_length(const WalshAssignment &assignment) {
    validate_assignment(assignment);
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < assignment.x.size(); i++) {
        top = std::max({top, assignment.x[i], assignment.y[i]});
    }
    if (top >= (1u << 30)) {
        throw std::invalid_argument("Walsh index too large");
    }
    return std::bit_ceil(top + 1);
}

Pauli pulse_from_signs(int sx, int sy) {
    if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1)) {
        throw std::invalid_argument("pulse signs must be +1 or -1");
    }
    if (sx > 0) {
        return sy > 0 ? Pauli::I : Pauli::X;
    }
    return sy > 0 ? Pauli::Y : Pauli::Z;
}

std::vector<PulseLayer> pulse_layers(const WalshAssignment &assignment) {
    std::uint32_t n = sequence_length(assignment);
    std::size_t nq = assignment.n_qubits();
    std::vector<PulseLayer> layers(n, PulseLayer(nq, Pauli::I));
    for (std::uint32_t k = 0; k < n; k++) {
        for (std::size_t i = 0; i < nq; i++) {
            layers[k][i] = pulse_from_signs(walsh_sign(assignment.x[i], k), walsh_sign(assignment.y[i], k));
        }
    }
    return layers;
}

std::vector<PulseLayer> mirror_layers(const std::vector<PulseLayer> &layers) {
    std::vector<PulseLayer> out = layers;
    out.insert(out.end(), layers.rbegin(), layers.rend());
    return out;
}

}  // namespace walshpulse
