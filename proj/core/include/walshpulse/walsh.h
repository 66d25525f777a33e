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

#ifndef WALSHPULSE_WALSH_H
#define WALSHPULSE_WALSH_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace walshpulse {

/// Row `index` of the Sylvester Hadamard matrix of order `values.size()`.
struct SignSequence {
    std::uint32_t index = 0;
    std::vector<std::int8_t> values;

    std::size_t length() const {
        return values.size();
    }
};

/// Pulse applied to one qubit in one layer. The numeric values are fixed by the
/// schedule format and must not change.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

struct WalshAssignment {
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> y;

    std::size_t n_qubits() const {
        return x.size();
    }
    bool operator==(const WalshAssignment &) const = default;
};

using PulseLayer = std::vector<Pauli>;

inline bool is_power_of_two(std::uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

/// Entry (index, k) of the Sylvester Hadamard matrix of any order > max(index, k).
inline int walsh_sign(std::uint32_t index, std::uint32_t k) {
    return (std::popcount(index & k) & 1) ? -1 : 1;
}

SignSequence hadamard_row(std::uint32_t index, std::uint32_t size);

/// (1/n) sum_k a_k b_k. Throws std::invalid_argument on a length mismatch.
double walsh_inner(const SignSequence &a, const SignSequence &b);

/// Smallest power of two strictly greater than every index in the assignment.
std::uint32_t sequence_length(const WalshAssignment &assignment);

/// Pulse P with P^-1 X P = sx X and P^-1 Y P = sy Y.
Pauli pulse_from_signs(int sx, int sy);

/// Layer k holds pulse_from_signs(w_{x_i}^(k), w_{y_i}^(k)) for each qubit i.
std::vector<PulseLayer> pulse_layers(const WalshAssignment &assignment);

/// Appends the reversed layer list, giving the symmetric second-order sequence.
std::vector<PulseLayer> mirror_layers(const std::vector<PulseLayer> &layers);

void validate_assignment(const WalshAssignment &assignment);

}  // namespace walshpulse

#endif
