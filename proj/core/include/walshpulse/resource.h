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

#ifndef WALSHPULSE_RESOURCE_H
#define WALSHPULSE_RESOURCE_H

#include <array>
#include <string>
#include <vector>

#include "walshpulse/walsh.h"

namespace walshpulse {

struct LocalField {
    double hx = 0;
    double hy = 0;
    double hz = 0;
    bool operator==(const LocalField &) const = default;
};

/// H_R = sum_{i<j} (jx_ij X_i X_j + jy_ij Y_i Y_j) + sum_i h_i . sigma_i.
class ResourceHamiltonian {
   public:
    ResourceHamiltonian() = default;
    /// jx, jy are row-major N x N, symmetric with zero diagonal. `fields` is
    /// either empty or has one entry per qubit.
    ResourceHamiltonian(int n_qubits, std::vector<double> jx, std::vector<double> jy, std::vector<LocalField> fields = {});

    /// jx = jy = -j / r^alpha (jy = 0 when `ising`) over arbitrary 2-D positions.
    static ResourceHamiltonian power_law(
        const std::vector<std::array<double, 2>> &positions, double alpha, double j = 1.0, bool ising = false);
    /// Unit-spaced 1-D chain.
    static ResourceHamiltonian power_law_chain(int n_qubits, double alpha, double j = 1.0, bool ising = false);

    int n_qubits() const {
        return n_;
    }
    double jx(int i, int j) const {
        return jx_[static_cast<std::size_t>(i) * n_ + j];
    }
    double jy(int i, int j) const {
        return jy_[static_cast<std::size_t>(i) * n_ + j];
    }
    /// Coupling on channel X or Y.
    double coupling(Pauli channel, int i, int j) const;
    const std::vector<double> &jx_matrix() const {
        return jx_;
    }
    const std::vector<double> &jy_matrix() const {
        return jy_;
    }
    const std::vector<LocalField> &fields() const {
        return fields_;
    }
    ResourceHamiltonian with_fields(std::vector<LocalField> fields) const;

   private:
    int n_ = 0;
    std::vector<double> jx_;
    std::vector<double> jy_;
    std::vector<LocalField> fields_;
};

}  // namespace walshpulse

#endif
