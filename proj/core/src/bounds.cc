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

#include "walshpulse/bounds.h"

#include <cmath>
#include <stdexcept>

namespace walshpulse {

namespace {

void check_common(double alpha, int n_qubits, double j) {
    if (!std::isfinite(alpha) || alpha < 0) {
        throw std::invalid_argument("alpha must be finite and non-negative");
    }
    if (alpha == 1) {
        throw std::invalid_argument("the Trotter bound is singular at alpha = 1");
    }
    if (n_qubits < 1 || !(j > 0)) {
        throw std::invalid_argument("bound needs N >= 1 and J > 0");
    }
}

}  // namespace

double a_alpha(double alpha) {
    if (!(alpha > 1)) {
        throw std::invalid_argument("a_alpha needs alpha > 1");
    }
    double r = alpha / (alpha - 1);
    return 2 * r * r;
}

double b_alpha(double alpha) {
    if (!(alpha < 1) || alpha < 0) {
        throw std::invalid_argument("b_alpha needs 0 <= alpha < 1");
    }
    return 2 / ((1 - alpha) * (1 - alpha) * (2 - alpha));
}

TrotterBoundReport trotter_bound(double alpha, int n_qubits, double j, std::span<const double> taus, double total_time) {
    check_common(alpha, n_qubits, j);
    if (!(total_time >= 0)) {
        throw std::invalid_argument("total time must be non-negative");
    }
    TrotterBoundReport r;
    r.alpha = alpha;
    r.n_qubits = n_qubits;
    r.j = j;
    r.total_time = total_time;
    for (double t : taus) {
        if (!(t >= 0)) {
            throw std::invalid_argument("sequence periods must be non-negative");
        }
        r.total_tau += t;
    }
    double n = n_qubits;
    double scale = (j * total_time) * (j * r.total_tau);
    if (alpha > 1) {
        r.regime = BoundRegime::AlphaGreaterThanOne;
        r.constant = a_alpha(alpha);
        r.bound = r.constant * n * scale;
    } else {
        r.regime = BoundRegime::AlphaLessThanOne;
        r.constant = b_alpha(alpha);
        r.bound = r.constant * std::pow(n, 3 - 2 * alpha) * scale;
    }
    return r;
}

double period_for_kappa(double alpha, int n_qubits, double j, double total_time, double kappa) {
    check_common(alpha, n_qubits, j);
    if (!(total_time > 0) || !(kappa > 0)) {
        throw std::invalid_argument("period selection needs T > 0 and kappa > 0");
    }
    double n = n_qubits;
    double jt = j * total_time;
    double j_sum_tau = alpha > 1 ? kappa / (n * jt) : kappa * std::pow(n, 2 * alpha - 3) / jt;
    return j_sum_tau / j;
}

}  // namespace walshpulse
