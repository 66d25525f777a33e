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

#ifndef WALSHPULSE_SCHEDULE_H
#define WALSHPULSE_SCHEDULE_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "walshpulse/gates.h"
#include "walshpulse/walsh.h"

namespace walshpulse {

/// Finite-pulse compensation. `shrink` is the fraction of the block period cut
/// from the identity-layer interval (split evenly over both identity layers of
/// a mirrored block); the caller stretches the target time by `rescale`.
struct FpDeformation {
    double shrink = 0;
    double rescale = 1;
    bool operator==(const FpDeformation &) const = default;
};

/// One Walsh sequence. Over a cycle with base period tau it runs for c * tau,
/// bracketed by set pulses: set_pre first, then the layers, then set_post.
struct WalshBlock {
    WalshAssignment assignment;
    double c = 1;
    std::vector<SingleQubitGate> set_pre;
    std::vector<SingleQubitGate> set_post;
    /// Fractions of c * tau, one per executed layer.
    std::vector<double> interval_durations;

    bool has_set_pulses() const;
};

struct PulseSchedule {
    int n_qubits = 0;
    int trotter_order = 1;
    std::vector<WalshBlock> blocks;
    /// Per-qubit sign-schedule index e_i; empty means every sign is +1.
    std::vector<std::uint32_t> sign_e;
    std::optional<FpDeformation> fp_deformation;

    /// Executed layer list of a block: the Walsh layers, mirrored when p = 2.
    std::vector<PulseLayer> block_layers(std::size_t block) const;
    /// Period L of the sign schedule (1 when absent).
    std::uint32_t sign_period() const;
    /// s_i^(l) = w_{e_i}^(l mod L).
    int sign(int qubit, std::uint64_t cycle) const;
    /// Sum of block coefficients: physical cycle time divided by tau.
    double total_c() const;
    /// Largest executed layer count over blocks.
    std::size_t max_layers() const;
    /// (block, duration factor) in execution order. For p = 2 with several
    /// blocks the cycle is the blocks forward then backward, each at half time,
    /// so the whole cycle is symmetric.
    std::vector<std::pair<std::size_t, double>> execution_order() const;
    /// Single-qubit pulse events per cycle, each P and P^-1 counted separately.
    std::size_t pulse_count() const;
    /// Pulse count after merging P^(k)^-1 P^(k+1) on each qubit.
    std::size_t merged_pulse_count() const;
    /// Smallest cycle count >= cycles that is a multiple of the sign period.
    std::uint64_t round_cycles(std::uint64_t cycles) const;

    /// Throws std::invalid_argument on any broken structural invariant.
    void validate() const;
};

std::vector<double> uniform_intervals(std::size_t n);

}  // namespace walshpulse

#endif
