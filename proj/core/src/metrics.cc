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

#include "walshpulse/metrics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walshpulse {

double fidelity(const StateVector &psi, const StateVector &phi) {
    if (psi.n_qubits() != phi.n_qubits()) {
        throw std::invalid_argument("fidelity of states with different dimensions");
    }
    double f = std::abs(phi.inner(psi)) / (psi.norm() * phi.norm());
    return std::min(f, 1.0);
}

StateVector cluster_reference(int n_qubits, double j) {
    if (!(j > 0)) {
        throw std::invalid_argument("cluster reference needs j > 0");
    }
    StateVector psi(n_qubits);
    // exp(i pi/4 X_i X_{i+1}) per link; j cancels against T = pi / (4 j).
    for (int i = 0; i + 1 < n_qubits; i++) {
        PauliString xx;
        xx.set(i, Pauli::X);
        xx.set(i + 1, Pauli::X);
        psi.apply_pauli_rotation(xx, -std::numbers::pi / 2);
    }
    return psi;
}

std::vector<double> stabilizer_expectations(const StateVector &psi, std::span<const PauliStringOperator> stabilizers) {
    std::vector<double> out;
    for (const auto &op : stabilizers) {
        if (op.n_qubits() != psi.n_qubits() || op.terms().size() != 1 || op.terms()[0].coefficient != 1.0) {
            throw std::invalid_argument("stabilizer must be a single Pauli string with coefficient 1");
        }
        out.push_back(psi.expectation(op.terms()[0].string));
    }
    return out;
}

LinearFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit needs equally many x and y values");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t k = 0; k < x.size(); k++) {
        if (x[k] > 0 && y[k] > 0 && std::isfinite(x[k]) && std::isfinite(y[k])) {
            lx.push_back(std::log(x[k]));
            ly.push_back(std::log(y[k]));
        }
    }
    if (lx.size() < 2) {
        throw std::invalid_argument("fit needs at least two positive points");
    }
    double m = static_cast<double>(lx.size());
    double mx = 0;
    double my = 0;
    for (std::size_t k = 0; k < lx.size(); k++) {
        mx += lx[k];
        my += ly[k];
    }
    mx /= m;
    my /= m;
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t k = 0; k < lx.size(); k++) {
        sxx += (lx[k] - mx) * (lx[k] - mx);
        sxy += (lx[k] - mx) * (ly[k] - my);
        syy += (ly[k] - my) * (ly[k] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    fit.points = lx.size();
    return fit;
}

}  // namespace walshpulse
