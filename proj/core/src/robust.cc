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

#include <cmath>
#include <set>
#include <string>

#include "walshpulse/compiler.h"

namespace walshpulse {

PulseSchedule robustify(PulseSchedule schedule, const RobustnessPolicy &policy) {
    int n = schedule.n_qubits;
    std::vector<std::uint32_t> e = policy.e_indices;
    if (e.empty()) {
        for (int i = 0; i < n; i++) {
            e.push_back(static_cast<std::uint32_t>(i + 1));
        }
    }
    if (e.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("sign schedule needs one index per qubit");
    }
    for (auto v : e) {
        if (v == 0) {
            throw std::invalid_argument("sign-schedule indices must be positive");
        }
    }
    schedule.sign_e = e;
    schedule.fp_deformation.reset();

    if (policy.finite_pulse) {
        const auto &fp = *policy.finite_pulse;
        if (std::set<std::uint32_t>(e.begin(), e.end()).size() != e.size()) {
            throw std::invalid_argument("finite-pulse robustness needs pairwise distinct sign indices");
        }
        if (!(fp.t_p >= 0) || !(fp.tau > 0)) {
            throw std::invalid_argument("finite-pulse policy needs t_p >= 0 and tau > 0");
        }
        double eps = -1;
        for (const auto &b : schedule.blocks) {
            for (std::size_t i = 0; i < b.assignment.x.size(); i++) {
                if (b.assignment.x[i] == 0 || b.assignment.y[i] == 0) {
                    throw std::invalid_argument("finite-pulse robustness needs nonzero Walsh indices (apply dd_guard)");
                }
            }
            double layers = static_cast<double>(b.interval_durations.size());
            double interval = b.c * fp.tau / layers;
            if (!(interval > 2 * fp.t_p)) {
                throw std::invalid_argument(
                    "interval " + std::to_string(interval) + " is not longer than two pulse durations");
            }
            double block_eps = 2 * layers * fp.t_p / (b.c * fp.tau);
            if (eps >= 0 && std::abs(block_eps - eps) > 1e-9 * std::max(1.0, eps)) {
                throw std::invalid_argument("finite-pulse deformation needs the same pulse fraction in every block");
            }
            eps = block_eps;
        }
        schedule.fp_deformation = FpDeformation{3 * eps / 8, 1 / (1 - 5 * eps / 8)};
    }
    schedule.validate();
    return schedule;
}

}  // namespace walshpulse
