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

#include "walshpulse/resource.h"

#include <cmath>
#include <stdexcept>

namespace walshpulse {

namespace {

void check_matrix(const std::vector<double> &m, int n, const char *name) {
    if (m.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument(std::string(name) + " must be an N x N matrix");
    }
    for (int i = 0; i < n; i++) {
        if (m[i * n + i] != 0) {
            throw std::invalid_argument(std::string(name) + " must have a zero diagonal");
        }
        for (int j = 0; j < n; j++) {
            if (!std::isfinite(m[i * n + j])) {
                throw std::invalid_argument(std::string(name) + " has a non-finite entry");
            }
            if (m[i * n + j] != m[j * n + i]) {
                throw std::invalid_argument(std::string(name) + " must be symmetric");
            }
        }
    }
}

}  // namespace

ResourceHamiltonian::ResourceHamiltonian(
    int n_qubits, std::vector<double> jx, std::vector<double> jy, std::vector<LocalField> fields)
    : n_(n_qubits), jx_(std::move(jx)), jy_(std::move(jy)), fields_(std::move(fields)) {
    if (n_qubits <= 0 || n_qubits > 30) {
        throw std::invalid_argument("resource qubit count must be in [1, 30]");
    }
    check_matrix(jx_, n_, "jx");
    check_matrix(jy_, n_, "jy");
    if (!fields_.empty() && fields_.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("fields must list one (hx, hy, hz) triple per qubit");
    }
    for (const auto &f : fields_) {
        if (!std::isfinite(f.hx) || !std::isfinite(f.hy) || !std::isfinite(f.hz)) {
            throw std::invalid_argument("non-finite local field");
        }
    }
}

ResourceHamiltonian ResourceHamiltonian::power_law(
    const std::vector<std::array<double, 2>> &positions, double alpha, double j, bool ising) {
    int n = static_cast<int>(positions.size());
    if (!std::isfinite(alpha) || alpha < 0) {
        throw std::invalid_argument("power-law exponent must be finite and non-negative");
    }
    std::vector<double> jx(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> jy(jx.size(), 0.0);
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            double r = std::hypot(positions[a][0] - positions[b][0], positions[a][1] - positions[b][1]);
            if (!(r > 0)) {
                throw std::invalid_argument("coincident qubit positions");
            }
            double c = -j / std::pow(r, alpha);
            jx[a * n + b] = jx[b * n + a] = c;
            if (!ising) {
                jy[a * n + b] = jy[b * n + a] = c;
            }
        }
    }
    return ResourceHamiltonian(n, std::move(jx), std::move(jy));
}

ResourceHamiltonian ResourceHamiltonian::power_law_chain(int n_qubits, double alpha, double j, bool ising) {
    std::vector<std::array<double, 2>> pos(n_qubits);
    for (int i = 0; i < n_qubits; i++) {
        pos[i] = {static_cast<double>(i), 0.0};
    }
    return power_law(pos, alpha, j, ising);
}

double ResourceHamiltonian::coupling(Pauli channel, int i, int j) const {
    switch (channel) {
        case Pauli::X:
            return jx(i, j);
        case Pauli::Y:
            return jy(i, j);
        default:
            throw std::invalid_argument("resource couplings exist only on the X and Y channels");
    }
}

ResourceHamiltonian ResourceHamiltonian::with_fields(std::vector<LocalField> fields) const {
    return ResourceHamiltonian(n_, jx_, jy_, std::move(fields));
}

}  // namespace walshpulse
