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

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "walshpulse/compiler.h"

namespace walshpulse {

namespace {

std::vector<int> matching_groups(const Matching &m, int n) {
    if (m.n_vertices != 0 && m.n_vertices != n) {
        throw std::invalid_argument("matching vertex count differs from qubit count");
    }
    std::vector<int> g(n, -1);
    int label = 0;
    for (auto [a, b] : m.pairs) {
        if (a < 0 || b >= n) {
            throw std::invalid_argument("matching pair outside qubit range");
        }
        if (g[a] >= 0 || g[b] >= 0) {
            throw std::invalid_argument("matching pairs share a qubit");
        }
        g[a] = g[b] = label++;
    }
    return g;
}

// Qubits are visited in order; each new group takes the smallest index not held
// by an already-labelled qubit within `reach` of any group member.
std::vector<std::uint32_t> assign_channel(std::span<const int> groups, int reach) {
    int n = static_cast<int>(groups.size());
    std::vector<std::uint32_t> index(n, 0);
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; i++) {
        if (done[i]) {
            continue;
        }
        std::vector<int> members{i};
        if (groups[i] >= 0) {
            for (int k = i + 1; k < n; k++) {
                if (groups[k] == groups[i]) {
                    members.push_back(k);
                }
            }
        }
        for (int a : members) {
            for (int b : members) {
                if (std::abs(a - b) > reach) {
                    throw std::invalid_argument(
                        "coupled qubits " + std::to_string(a) + " and " + std::to_string(b) + " lie beyond the cutoff distance");
                }
            }
        }
        std::set<std::uint32_t> forbidden;
        for (int k = 0; k < n; k++) {
            if (!done[k]) {
                continue;
            }
            for (int m : members) {
                if (std::abs(k - m) <= reach) {
                    forbidden.insert(index[k]);
                    break;
                }
            }
        }
        std::uint32_t v = 0;
        while (forbidden.count(v)) {
            v++;
        }
        for (int m : members) {
            index[m] = v;
            done[m] = true;
        }
    }
    return index;
}

}  // namespace

WalshAssignment assign_groups(std::span<const int> x_groups, std::span<const int> y_groups, std::optional<CutoffConfig> cutoff) {
    if (x_groups.size() != y_groups.size() || x_groups.empty()) {
        throw std::invalid_argument("group labels must cover the same nonzero qubit count");
    }
    int n = static_cast<int>(x_groups.size());
    int reach = n;
    if (cutoff) {
        if (cutoff->lambda_r <= 0) {
            throw std::invalid_argument("cutoff distance must be positive");
        }
        reach = cutoff->lambda_r;
    }
    return WalshAssignment{assign_channel(x_groups, reach), assign_channel(y_groups, reach)};
}

WalshAssignment assign_indices(const Matching &x_matching, const Matching &y_matching, int n_qubits) {
    auto gx = matching_groups(x_matching, n_qubits);
    auto gy = matching_groups(y_matching, n_qubits);
    return assign_groups(gx, gy);
}

WalshAssignment assign_indices_with_cutoff(
    const Matching &x_matching, const Matching &y_matching, int n_qubits, CutoffConfig cutoff) {
    auto gx = matching_groups(x_matching, n_qubits);
    auto gy = matching_groups(y_matching, n_qubits);
    return assign_groups(gx, gy, cutoff);
}

WalshAssignment dd_guard(const WalshAssignment &a) {
    validate_assignment(a);
    bool guarded = true;
    for (std::size_t i = 0; i < a.x.size(); i++) {
        guarded = guarded && a.x[i] != 0 && a.y[i] != 0 && a.x[i] != a.y[i];
    }
    if (guarded) {
        return a;
    }
    WalshAssignment out = a;
    std::uint32_t top = 0;
    for (auto &v : out.x) {
        v += 1;
        top = std::max(top, v);
    }
    for (auto &v : out.y) {
        v += top + 1;
    }
    return out;
}

}  // namespace walshpulse
