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

#include "walshpulse/schedule.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace walshpulse {

bool WalshBlock::has_set_pulses() const {
    for (const auto &g : set_pre) {
        if (!g.is_identity()) {
            return true;
        }
    }
    for (const auto &g : set_post) {
        if (!g.is_identity()) {
            return true;
        }
    }
    return false;
}

std::vector<double> uniform_intervals(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

std::vector<PulseLayer> PulseSchedule::block_layers(std::size_t block) const {
    auto layers = pulse_layers(blocks.at(block).assignment);
    return trotter_order == 2 ? mirror_layers(layers) : layers;
}

std::uint32_t PulseSchedule::sign_period() const {
    std::uint32_t top = 0;
    for (auto e : sign_e) {
        top = std::max(top, e);
    }
    return std::bit_ceil(top + 1);
}

int PulseSchedule::sign(int qubit, std::uint64_t cycle) const {
    if (sign_e.empty()) {
        return 1;
    }
    return walsh_sign(sign_e[qubit], static_cast<std::uint32_t>(cycle % sign_period()));
}

double PulseSchedule::total_c() const {
    double s = 0;
    for (const auto &b : blocks) {
        s += b.c;
    }
    return s;
}

std::size_t PulseSchedule::max_layers() const {
    std::size_t m = 0;
    for (const auto &b : blocks) {
        m = std::max<std::size_t>(m, sequence_length(b.assignment) * (trotter_order == 2 ? 2 : 1));
    }
    return m;
}

std::vector<std::pair<std::size_t, double>> PulseSchedule::execution_order() const {
    std::vector<std::pair<std::size_t, double>> order;
    if (trotter_order == 2 && blocks.size() > 1) {
        for (std::size_t b = 0; b < blocks.size(); b++) {
            order.emplace_back(b, 0.5);
        }
        for (std::size_t b = blocks.size(); b-- > 0;) {
            order.emplace_back(b, 0.5);
        }
    } else {
        for (std::size_t b = 0; b < blocks.size(); b++) {
            order.emplace_back(b, 1.0);
        }
    }
    return order;
}

std::size_t PulseSchedule::pulse_count() const {
    std::size_t count = 0;
    for (auto [b, factor] : execution_order()) {
        (void)factor;
        const auto &block = blocks[b];
        for (const auto &layer : block_layers(b)) {
            for (Pauli p : layer) {
                count += p != Pauli::I ? 2 : 0;
            }
        }
        for (int i = 0; i < n_qubits; i++) {
            count += !block.set_pre[i].is_identity();
            count += !block.set_post[i].is_identity();
        }
    }
    return count;
}

std::size_t PulseSchedule::merged_pulse_count() const {
    std::size_t count = 0;
    for (auto [b, factor] : execution_order()) {
        (void)factor;
        const auto &block = blocks[b];
        auto layers = block_layers(b);
        for (int i = 0; i < n_qubits; i++) {
            Pauli prev = Pauli::I;
            for (const auto &layer : layers) {
                count += layer[i] != prev;
                prev = layer[i];
            }
            count += prev != Pauli::I;
            count += !block.set_pre[i].is_identity();
            count += !block.set_post[i].is_identity();
        }
    }
    return count;
}

std::uint64_t PulseSchedule::round_cycles(std::uint64_t cycles) const {
    std::uint64_t period = sign_period();
    return ((cycles + period - 1) / period) * period;
}

void PulseSchedule::validate() const {
    auto fail = [](const std::string &msg) {
        throw std::invalid_argument("invalid schedule: " + msg);
    };
    if (n_qubits <= 0) {
        fail("qubit count must be positive");
    }
    if (trotter_order != 1 && trotter_order != 2) {
        fail("trotter order must be 1 or 2");
    }
    if (blocks.empty()) {
        fail("no blocks");
    }
    for (std::size_t b = 0; b < blocks.size(); b++) {
        const auto &block = blocks[b];
        std::string where = "block " + std::to_string(b) + ": ";
        if (block.assignment.n_qubits() != static_cast<std::size_t>(n_qubits) ||
            block.assignment.y.size() != static_cast<std::size_t>(n_qubits)) {
            fail(where + "assignment size differs from qubit count");
        }
        if (!(block.c > 0) || !std::isfinite(block.c)) {
            fail(where + "coefficient must be positive");
        }
        std::size_t layers = sequence_length(block.assignment) * (trotter_order == 2 ? 2 : 1);
        if (block.interval_durations.size() != layers) {
            fail(where + "expected " + std::to_string(layers) + " interval durations");
        }
        double sum = 0;
        for (double d : block.interval_durations) {
            if (!(d > 0)) {
                fail(where + "interval durations must be positive");
            }
            sum += d;
        }
        if (std::abs(sum - 1) > 1e-12) {
            fail(where + "interval durations must sum to 1");
        }
        if (block.set_pre.size() != static_cast<std::size_t>(n_qubits) ||
            block.set_post.size() != static_cast<std::size_t>(n_qubits)) {
            fail(where + "set pulses need one gate per qubit");
        }
        for (int i = 0; i < n_qubits; i++) {
            if (!(block.set_post[i] * block.set_pre[i]).is_identity(1e-9)) {
                fail(where + "set_post does not undo set_pre on qubit " + std::to_string(i));
            }
        }
        if (fp_deformation) {
            double per_layer = trotter_order == 2 ? fp_deformation->shrink / 2 : fp_deformation->shrink;
            if (!(block.interval_durations.front() - per_layer > 0)) {
                fail(where + "finite-pulse shrink exceeds the identity interval");
            }
        }
    }
    if (!sign_e.empty() && sign_e.size() != static_cast<std::size_t>(n_qubits)) {
        fail("sign schedule needs one index per qubit");
    }
    if (fp_deformation) {
        if (!(fp_deformation->shrink >= 0) || !(fp_deformation->rescale >= 1) || !std::isfinite(fp_deformation->rescale)) {
            fail("finite-pulse deformation needs shrink >= 0 and rescale >= 1");
        }
    }
}

}  // namespace walshpulse
